#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include "heptad/certio.hpp"
#include "heptad/develop.hpp"
#include "heptad/errors.hpp"
#include "heptad/fixtures.hpp"
#include "heptad/verify.hpp"

using namespace heptad;

TEST_CASE("every built-in starter set develops to a verified decomposition") {
  std::map<std::string, int> expected_blocks = {
      {"Kstar(7)", 6},   {"Kstar(8)", 8},   {"Kstar(14)", 26},
      {"Kstar(15)", 30}, {"Kstar(28)", 108}, {"Kstar(29)", 116},
      {"Kstar(3x7,residues)", 42}, {"Kstar(5x7,residues)", 140},
      {"K(3x7,residues)", 21}, {"K(5x7,residues)", 70},
  };
  int directed_seen = 0;
  for (const FixtureRecord& r : Registry::instance().records()) {
    CAPTURE(r.host.key());
    CAPTURE(r.cls);
    auto it = expected_blocks.find(r.host.key());
    REQUIRE(it != expected_blocks.end());
    if (r.cls == kCycleClass) {
      auto cycles = develop_cycles(r.starters);
      CHECK(int(cycles.size()) == it->second);
      CHECK(verify_undirected(cycles, r.host).ok);
    } else {
      Decomposition d{r.host, r.cls, develop(r.starters), {}};
      CHECK(int(d.blocks.size()) == it->second);
      CHECK(verify(d).ok);
      directed_seen++;
    }
    CHECK(r.sha256 == fixture_checksum(r));
  }
  // 1 + 8 + 8 + 1 + 8 + 1 + 1 + 1 published records
  CHECK(directed_seen >= 29);
}

TEST_CASE("base_design returns the developed fixture") {
  const Registry& reg = Registry::instance();
  Decomposition d = reg.base_design(HostSpec::kstar(8), 4);
  REQUIRE(d.blocks.size() == 8);
  CHECK(d.blocks[0] == Block{4, {0, 1, 3, 7, 4, 5, 2}});
  CHECK(d.blocks[1] == Block{4, {1, 2, 4, 0, 5, 6, 3}});
  CHECK(d.trace.step == "fixture");

  Decomposition d29 = reg.base_design(HostSpec::kstar(29), 8);
  CHECK(d29.blocks.size() == 116);

  CHECK_THROWS_AS(reg.base_design(HostSpec::kstar(7), 1), NoFixture);
  CHECK_THROWS_AS(reg.base_design(HostSpec::kstar(100), 8), NoFixture);
}

TEST_CASE("development maps the fixed point to the top label") {
  const Registry& reg = Registry::instance();
  Decomposition d = reg.base_design(HostSpec::kstar(7), 8);
  REQUIRE(d.blocks.size() == 6);
  for (const Block& b : d.blocks) CHECK(b.labels[6] == 6);
  // finite labels shift, the fixed point does not
  CHECK(d.blocks[0] == Block{8, {0, 1, 3, 4, 2, 5, 6}});
  CHECK(d.blocks[1] == Block{8, {1, 2, 4, 5, 3, 0, 6}});
}

TEST_CASE("development commutes with relabeling") {
  const FixtureRecord* r =
      Registry::instance().find(HostSpec::kstar(14), 6);
  REQUIRE(r != nullptr);
  const int n = r->starters.modulus;
  for (int c : {1, 5, 12}) {
    StarterSet shifted = r->starters;
    for (Starter& s : shifted.starters)
      for (Vertex& l : s.block.labels)
        if (l != kInf) l = (l + c) % n;
    auto a = develop(r->starters);
    auto b = develop(shifted);
    // same multiset of blocks, rotated within each orbit
    std::vector<Block> a2 = a, b2 = b;
    std::sort(a2.begin(), a2.end());
    std::sort(b2.begin(), b2.end());
    CHECK(a2 == b2);
  }
}

TEST_CASE("empty starter set develops to the empty decomposition") {
  StarterSet s;
  s.modulus = 0;
  CHECK(develop(s).empty());
  Decomposition d{HostSpec::kstar(0), 1, {}, {}};
  CHECK(verify(d).ok);
}

TEST_CASE("starter validation") {
  StarterSet s;
  s.modulus = 6;
  s.has_infinity = false;
  s.starters.push_back({Block{8, {0, 1, 3, 4, 2, 5, kInf}}, 6});
  CHECK_THROWS_AS(develop(s), InvalidStarter);  // fixed point not allowed
  s.has_infinity = true;
  CHECK(develop(s).size() == 6);
  s.starters[0].orbit = 4;  // does not divide 6
  CHECK_THROWS_AS(develop(s), InvalidStarter);
  s.starters[0].orbit = 3;  // divides: fine, short orbit
  CHECK(develop(s).size() == 3);
  s.starters[0].block.labels[0] = 6;  // out of range
  CHECK_THROWS_AS(develop(s), InvalidStarter);
}

TEST_CASE("fixture files round-trip bit-exactly") {
  namespace fs = std::filesystem;
  const FixtureRecord* r = Registry::instance().find(
      HostSpec::kstar_multi(3, Layout::Residues), 8);
  REQUIRE(r != nullptr);
  fs::path dir = fs::temp_directory_path() / "heptad_fixture_test";
  fs::create_directories(dir);
  fs::path p = dir / "ex.json";
  store_fixture(*r, p);
  FixtureRecord back = load_fixture(p);
  CHECK(back == *r);
  // second write produces identical bytes
  std::string first = read_text_file(p);
  store_fixture(back, p);
  CHECK(read_text_file(p) == first);

  // tampering with a label breaks the checksum
  std::string broken = first;
  auto pos = broken.find("\"labels\": [");
  REQUIRE(pos != std::string::npos);
  pos = broken.find_first_of("0123456789", pos);
  REQUIRE(pos != std::string::npos);
  broken[pos] = broken[pos] == '9' ? '8' : '9';
  fs::path pb = dir / "broken.json";
  write_text_file(pb, broken);
  CHECK_THROWS_AS(load_fixture(pb), ChecksumMismatch);
  fs::remove_all(dir);
}

TEST_CASE("store_fixture refuses records that fail verification") {
  namespace fs = std::filesystem;
  FixtureRecord r = *Registry::instance().find(HostSpec::kstar(8), 2);
  r.starters.starters[0].block.labels[3] = 2;  // duplicates another label
  fs::path p = fs::temp_directory_path() / "heptad_bad_fixture.json";
  CHECK_THROWS(store_fixture(r, p));
  CHECK(!fs::exists(p));
}
