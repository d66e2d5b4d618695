#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "heptad/decomposition.hpp"
#include "heptad/develop.hpp"
#include "heptad/hosts.hpp"

namespace heptad {

// Class id 0 stands for orientation-free 7-cycles ("C7" in files).
inline constexpr int kCycleClass = 0;

std::string record_class_name(int cls);       // "C7" or "D1".."D10"
int record_class_from_name(const std::string& s);

struct FixtureRecord {
  HostSpec host;
  int cls = 0;
  StarterSet starters;
  std::string provenance;  // "paper-example-k" or "search"
  std::string sha256;      // over the serialized record minus this field
  friend bool operator==(const FixtureRecord&, const FixtureRecord&) = default;
};

// Reads a fixture file, recomputes the checksum, re-develops and verifies.
FixtureRecord load_fixture(const std::filesystem::path& path);

// Refuses to write records whose development fails verification; fills in
// the checksum.
void store_fixture(FixtureRecord record, const std::filesystem::path& path);

// The built-in base designs plus any overrides found in the directory named
// by HEPTAD_FIXTURES (all *.json files, loaded in name order).
class Registry {
 public:
  static const Registry& instance();

  const FixtureRecord* find(const HostSpec& host, int cls) const;

  // Developed and verified; throws NoFixture when absent.
  Decomposition base_design(const HostSpec& host, int cls) const;

  // The C7 records develop to cycles instead.
  std::vector<UBlock> base_cycles(const HostSpec& host) const;

  std::span<const FixtureRecord> records() const { return records_; }

 private:
  Registry();
  std::vector<FixtureRecord> records_;
};

// Built-in tables, before overrides: the published starter sets and the
// search-derived records frozen at generation time.
std::vector<FixtureRecord> builtin_fixtures();

// The (host, class) pairs the search must be able to re-derive.
std::vector<std::pair<HostSpec, int>> derived_fixture_specs();

}  // namespace heptad
