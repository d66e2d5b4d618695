#include "heptad/fixtures.hpp"

#include <algorithm>
#include <cstdlib>

#include "heptad/certio.hpp"
#include "heptad/errors.hpp"
#include "heptad/verify.hpp"

namespace heptad {

std::string record_class_name(int cls) {
  return cls == kCycleClass ? "C7" : class_name(cls);
}

int record_class_from_name(const std::string& s) {
  if (s == "C7") return kCycleClass;
  return class_from_name(s);
}

namespace {

void check_record(const FixtureRecord& r) {
  validate_host(r.host);
  validate_starters(r.starters);
  Report rep;
  if (r.cls == kCycleClass) {
    auto cycles = develop_cycles(r.starters);
    rep = verify_undirected(cycles, r.host);
  } else {
    Decomposition d;
    d.host = r.host;
    d.cls = r.cls;
    d.blocks = develop(r.starters);
    rep = verify(d);
  }
  if (!rep.ok)
    throw VerificationFailure("fixture " + r.host.key() + " " +
                              record_class_name(r.cls) +
                              " does not decompose its host");
}

}  // namespace

FixtureRecord load_fixture(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  FixtureRecord r = fixture_from_json(j);
  std::string want = fixture_checksum(r);
  if (r.sha256.empty() || r.sha256 != want)
    throw ChecksumMismatch(path.string() + ": checksum " + r.sha256 +
                           " does not match content " + want);
  check_record(r);
  return r;
}

void store_fixture(FixtureRecord record, const std::filesystem::path& path) {
  check_record(record);
  record.sha256 = fixture_checksum(record);
  write_text_file(path, fixture_to_json(record, true).dump(2) + "\n");
}

Registry::Registry() {
  records_ = builtin_fixtures();
  for (FixtureRecord& r : records_) {
    check_record(r);
    r.sha256 = fixture_checksum(r);
  }
  if (const char* dir = std::getenv("HEPTAD_FIXTURES")) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      FixtureRecord r = load_fixture(f);
      auto it = std::find_if(records_.begin(), records_.end(),
                             [&](const FixtureRecord& have) {
                               return have.host == r.host && have.cls == r.cls;
                             });
      if (it != records_.end())
        *it = std::move(r);
      else
        records_.push_back(std::move(r));
    }
  }
}

const Registry& Registry::instance() {
  static const Registry reg;
  return reg;
}

const FixtureRecord* Registry::find(const HostSpec& host, int cls) const {
  for (const FixtureRecord& r : records_)
    if (r.host == host && r.cls == cls) return &r;
  return nullptr;
}

Decomposition Registry::base_design(const HostSpec& host, int cls) const {
  const FixtureRecord* r = find(host, cls);
  if (!r || cls == kCycleClass)
    throw NoFixture("no base design for " + host.key() + " " +
                    record_class_name(cls));
  Decomposition d;
  d.host = host;
  d.cls = cls;
  d.blocks = develop(r->starters);
  d.trace = PlanNode{"fixture",
                     {{"host", host.key()}, {"class", record_class_name(cls)}},
                     {}};
  return d;
}

std::vector<UBlock> Registry::base_cycles(const HostSpec& host) const {
  const FixtureRecord* r = find(host, kCycleClass);
  if (!r) throw NoFixture("no cycle system for " + host.key());
  return develop_cycles(r->starters);
}

}  // namespace heptad
