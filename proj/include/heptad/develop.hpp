#pragma once

#include <vector>

#include "heptad/catalog.hpp"
#include "heptad/hosts.hpp"

namespace heptad {

// A base block plus the length of its additive orbit. labels use kInf for
// the fixed point.
struct Starter {
  Block block;
  int orbit = 0;
  friend bool operator==(const Starter&, const Starter&) = default;
};

struct StarterSet {
  int modulus = 0;
  bool has_infinity = false;
  std::vector<Starter> starters;
  friend bool operator==(const StarterSet&, const StarterSet&) = default;
};

void validate_starters(const StarterSet& s);  // throws InvalidStarter

// Develops every starter: block + i for i in [0, orbit), labels mod n, the
// fixed point mapped to label n (the host's top label). Block order is
// starter-major, shift-minor.
std::vector<Block> develop(const StarterSet& s);

// Same development for orientation-free 7-cycles (class field ignored).
std::vector<UBlock> develop_cycles(const StarterSet& s);

}  // namespace heptad
