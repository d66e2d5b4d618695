#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "heptad/errors.hpp"
#include "heptad/ingredients.hpp"
#include "heptad/verify.hpp"

using namespace heptad;

namespace {

int count_kind(const std::vector<UBlock>& blocks, UKind k) {
  return int(std::count_if(blocks.begin(), blocks.end(),
                           [&](const UBlock& b) { return b.kind == k; }));
}

}  // namespace

TEST_CASE("difference triples partition small sets") {
  std::vector<DiffTriple> one = difference_triples({1, 2, 3}, 9);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == DiffTriple{1, 2, 3, 9});

  std::vector<DiffTriple> two = difference_triples({1, 3, 4, 2, 5, 7}, 15);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == DiffTriple{1, 3, 4, 15});
  CHECK(two[1] == DiffTriple{2, 5, 7, 15});

  CHECK_THROWS_AS(difference_triples({1, 2, 4}, 12), Exhausted);
  CHECK_THROWS_AS(difference_triples({1, 2}, 9), NotAdmissible);
  CHECK_THROWS_AS(difference_triples({1, 2, 6}, 12), NotAdmissible);
}

TEST_CASE("developed triples cover their classes exactly") {
  for (int m : {9, 12, 15}) {
    std::vector<int> diffs;
    for (int d = 1; 2 * d < m; ++d) diffs.push_back(d);
    while (diffs.size() % 3 != 0) diffs.pop_back();
    std::set<Edge> seen;
    for (const DiffTriple& t : difference_triples(diffs, m))
      for (Vertex s = 0; s < m; ++s) {
        Vertex b = (s + t.a) % m;
        Vertex c = (s + t.a + t.b) % m;
        for (Edge e : {make_edge(s, b), make_edge(b, c), make_edge(s, c)})
          CHECK(seen.insert(e).second);
      }
    CHECK(seen.size() == size_t(m) * diffs.size());
  }
}

TEST_CASE("matching splits of circulant difference classes") {
  std::vector<OneFactor> half = one_factor_split(3, 6);
  REQUIRE(half.size() == 1);
  CHECK(half[0].pairs == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});

  std::vector<OneFactor> pair = one_factor_split(1, 6);
  REQUIRE(pair.size() == 2);
  for (const OneFactor& f : pair) {
    CHECK(f.pairs.size() == 3);
    std::set<Vertex> touched;
    for (const Edge& e : f.pairs) {
      CHECK(touched.insert(e.first).second);
      CHECK(touched.insert(e.second).second);
    }
  }

  CHECK_THROWS_AS(one_factor_split(2, 6), NotSplittable);
  CHECK_THROWS_AS(one_factor_split(4, 6), NotAdmissible);
  CHECK_THROWS_AS(one_factor_split(1, 7), NotAdmissible);
}

TEST_CASE("Steiner triple systems across the admissible range") {
  for (int n = 3; n <= 99; n += 2) {
    if (n % 6 != 1 && n % 6 != 3) continue;
    CAPTURE(n);
    std::vector<UBlock> blocks = sts(n);
    CHECK(blocks.size() == size_t(n) * size_t(n - 1) / 6);
    CHECK(verify_undirected(blocks, HostSpec::complete(n)).ok);
  }
  CHECK_THROWS_AS(sts(5), NotAdmissible);
  CHECK_THROWS_AS(sts(6), NotAdmissible);
}

TEST_CASE("pairwise balanced designs with one 5-clique") {
  CHECK(pbd35(5) == std::vector<UBlock>{{UKind::K5, {0, 1, 2, 3, 4}}});
  for (int n = 11; n <= 47; n += 6) {
    CAPTURE(n);
    std::vector<UBlock> blocks = pbd35(n);
    CHECK(count_kind(blocks, UKind::K5) == 1);
    CHECK(count_kind(blocks, UKind::K3) == (n * (n - 1) / 2 - 10) / 3);
    CHECK(verify_undirected(blocks, HostSpec::complete(n)).ok);
  }
  CHECK(pbd35(9).size() == 12);
  CHECK_THROWS_AS(pbd35(8), NotAdmissible);
}

TEST_CASE("even orders lose a matching and split into triangles and cliques") {
  for (int n = 6; n <= 36; n += 2) {
    CAPTURE(n);
    auto [blocks, factor] = k3k5_even(n);
    CHECK(factor.pairs.size() == size_t(n) / 2);
    std::set<Vertex> touched;
    for (const Edge& e : factor.pairs) {
      CHECK(touched.insert(e.first).second);
      CHECK(touched.insert(e.second).second);
    }
    CHECK(verify_undirected(blocks, HostSpec::k_minus_factor(n, factor)).ok);
    int k5 = count_kind(blocks, UKind::K5);
    CHECK(k5 == ((n + 1) % 6 == 5 ? 1 : 0));
  }
  CHECK_THROWS_AS(k3k5_even(4), NotAdmissible);
  CHECK_THROWS_AS(k3k5_even(7), NotAdmissible);
}

TEST_CASE("seven point groups carry three Hamiltonian cycles") {
  std::vector<UBlock> cycles = c7_complete(7);
  CHECK(cycles.size() == 3);
  for (const UBlock& b : cycles) CHECK(b.kind == UKind::C7);
  CHECK(verify_undirected(cycles, HostSpec::complete(7)).ok);
}

TEST_CASE("seven cycle systems of complete graphs") {
  for (int v : {15, 21, 29, 35, 43, 49, 57, 63}) {
    CAPTURE(v);
    std::vector<UBlock> cycles = c7_complete(v);
    CHECK(cycles.size() == size_t(v) * size_t(v - 1) / 14);
    CHECK(verify_undirected(cycles, HostSpec::complete(v)).ok);
  }
  CHECK_THROWS_AS(c7_complete(8), NotAdmissible);
  CHECK_THROWS_AS(c7_complete(14), NotAdmissible);
}

TEST_CASE("seven cycle systems of multipartite hosts") {
  for (int n : {3, 5, 7, 9, 11}) {
    CAPTURE(n);
    std::vector<UBlock> cycles = c7_multipartite(n);
    CHECK(cycles.size() == size_t(7 * n) * size_t(7 * n - 7) / 14);
    HostSpec host = HostSpec::k_multi(n, Layout::Ranges);
    CHECK(verify_undirected(cycles, host).ok);
    for (const UBlock& b : cycles)
      for (size_t i = 0; i < 7; ++i)
        CHECK(host.part_of(b.labels[i]) != host.part_of(b.labels[(i + 1) % 7]));
  }
  CHECK_THROWS_AS(c7_multipartite(4), NotAdmissible);
  CHECK_THROWS_AS(c7_multipartite(1), NotAdmissible);
}
