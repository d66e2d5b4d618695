#pragma once

#include <stdexcept>
#include <string>

namespace heptad {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidBlock : Error {
  using Error::Error;
};

struct InvalidHost : Error {
  using Error::Error;
};

struct InvalidStarter : Error {
  using Error::Error;
};

// Carries the violated divisibility/order condition so callers can report it.
struct NotAdmissible : Error {
  explicit NotAdmissible(const std::string& reason) : Error(reason) {}
};

struct NoFixture : Error {
  using Error::Error;
};

struct NotSelfReverse : Error {
  using Error::Error;
};

struct NotSplittable : Error {
  using Error::Error;
};

struct UnsupportedBlock : Error {
  using Error::Error;
};

struct Exhausted : Error {
  explicit Exhausted(const std::string& what, bool budget_hit = false)
      : Error(what), budget(budget_hit) {}
  bool budget = false;
};

struct HostTooLarge : Error {
  using Error::Error;
};

struct VerificationFailure : Error {
  using Error::Error;
};

struct ChecksumMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace heptad
