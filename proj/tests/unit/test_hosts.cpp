#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "heptad/errors.hpp"
#include "heptad/hosts.hpp"

using namespace heptad;

TEST_CASE("arc counts match closed forms") {
  CHECK(arcs_of_host(HostSpec::kstar(7)).size() == 42);
  CHECK(arcs_of_host(HostSpec::kstar(0)).empty());
  CHECK(arcs_of_host(HostSpec::kstar_multi(3)).size() == 294);
  CHECK(arcs_of_host(HostSpec::kstar_even_minus_factor(3)).size() == 1176);
  CHECK(edges_of_host(HostSpec::complete(9)).size() == 36);
  CHECK(edges_of_host(HostSpec::k_multi(3)).size() == 147);

  for (int v : {0, 1, 2, 7, 14, 30})
    CHECK(arc_count_of_host(HostSpec::kstar(v)) ==
          (long long)(arcs_of_host(HostSpec::kstar(v)).size()));
  for (int r : {1, 2, 3, 5, 7})
    CHECK(arc_count_of_host(HostSpec::kstar_multi(r)) ==
          (long long)(arcs_of_host(HostSpec::kstar_multi(r)).size()));
  for (int x : {1, 2, 3, 4})
    CHECK(arc_count_of_host(HostSpec::kstar_even_minus_factor(x)) ==
          (long long)(arcs_of_host(HostSpec::kstar_even_minus_factor(x)).size()));
}

TEST_CASE("every admissible pair appears exactly once per direction") {
  HostSpec h = HostSpec::kstar_multi(3);
  auto arcs = arcs_of_host(h);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Arc& a : arcs) {
    CHECK(seen.insert({a.tail, a.head}).second);
    CHECK(h.part_of(a.tail) != h.part_of(a.head));
  }
  for (const Arc& a : arcs) CHECK(seen.count({a.head, a.tail}) == 1);
}

TEST_CASE("minus-factor host omits exactly the paired groups") {
  HostSpec h = HostSpec::kstar_even_minus_factor(2);  // 4 parts of 7
  auto arcs = arcs_of_host(h);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Arc& a : arcs) seen.insert({a.tail, a.head});
  // parts 0,1 are paired; 0,2 are not
  CHECK(seen.count({0, 7}) == 0);    // part 0 -> part 1
  CHECK(seen.count({0, 14}) == 1);   // part 0 -> part 2
  CHECK(seen.count({14, 21}) == 0);  // part 2 -> part 3 (paired)
  CHECK(seen.count({21, 0}) == 1);
  CHECK(arcs.size() == 28u * 21 - 98 * 2);
}

TEST_CASE("layouts assign parts by range or residue") {
  HostSpec ranges = HostSpec::kstar_multi(3, Layout::Ranges);
  CHECK(ranges.part_of(0) == 0);
  CHECK(ranges.part_of(6) == 0);
  CHECK(ranges.part_of(7) == 1);
  CHECK(ranges.part_of(20) == 2);
  HostSpec residues = HostSpec::kstar_multi(3, Layout::Residues);
  CHECK(residues.part_of(0) == 0);
  CHECK(residues.part_of(6) == 0);
  CHECK(residues.part_of(7) == 1);
  CHECK(residues.part_of(20) == 2);
  CHECK(residues.part_of(9) == 0);
  CHECK(ranges.part_of(9) == 1);
  // same arc count either way
  CHECK(arcs_of_host(ranges).size() == arcs_of_host(residues).size());
}

TEST_CASE("malformed hosts are rejected") {
  HostSpec h = HostSpec::kstar_multi(0);
  CHECK_THROWS_AS(validate_host(h), InvalidHost);
  h = HostSpec::kstar_even_minus_factor(0);
  CHECK_THROWS_AS(validate_host(h), InvalidHost);
  h = HostSpec::kstar(7);
  CHECK_THROWS_AS(edges_of_host(h), InvalidHost);
  h = HostSpec::complete(7);
  CHECK_THROWS_AS(arcs_of_host(h), InvalidHost);

  OneFactor bad{{{0, 1}, {1, 2}}};
  CHECK_THROWS_AS(validate_host(HostSpec::k_minus_factor(4, bad)), InvalidHost);
  OneFactor partial{{{0, 1}}};
  CHECK_THROWS_AS(validate_host(HostSpec::k_minus_factor(4, partial)),
                  InvalidHost);
  OneFactor good{{{0, 1}, {2, 3}}};
  CHECK(edges_of_host(HostSpec::k_minus_factor(4, good)).size() == 4);
}

TEST_CASE("ublock edges") {
  CHECK(edges_of_ublock(UBlock{UKind::K3, {0, 1, 2}}).size() == 3);
  CHECK(edges_of_ublock(UBlock{UKind::K5, {0, 1, 2, 3, 4}}).size() == 10);
  CHECK(edges_of_ublock(UBlock{UKind::I, {4, 9}}).size() == 1);
  auto c7 = edges_of_ublock(UBlock{UKind::C7, {0, 2, 4, 6, 8, 10, 12}});
  CHECK(c7.size() == 7);
  CHECK(std::count(c7.begin(), c7.end(), make_edge(12, 0)) == 1);
  CHECK(std::count(c7.begin(), c7.end(), make_edge(0, 4)) == 0);

  CHECK_THROWS_AS(edges_of_ublock(UBlock{UKind::K3, {0, 1}}), InvalidBlock);
  CHECK_THROWS_AS(edges_of_ublock(UBlock{UKind::C7, {0, 1, 2, 3, 4, 5, 0}}),
                  InvalidBlock);
}

TEST_CASE("inflating one triangle gives a 3x7 piece") {
  UBlock t{UKind::K3, {0, 1, 2}};
  auto pieces = inflate(std::span<const UBlock>(&t, 1));
  REQUIRE(pieces.size() == 1);
  CHECK(arcs_of_piece(pieces[0]).size() == 294);
}

TEST_CASE("inflating a 5-clique gives a 5x7 piece") {
  UBlock q{UKind::K5, {0, 1, 2, 3, 4}};
  auto pieces = inflate(std::span<const UBlock>(&q, 1));
  REQUIRE(pieces.size() == 1);
  CHECK(arcs_of_piece(pieces[0]).size() == 980);
}

TEST_CASE("inflating a triangle system tiles the multipartite host") {
  // the 7-point triangle system {0,1,3}+i (mod 7)
  std::vector<UBlock> fano;
  for (int i = 0; i < 7; ++i)
    fano.push_back(UBlock{UKind::K3, {i, (i + 1) % 7, (i + 3) % 7}});
  auto pieces = inflate(fano);
  CHECK(pieces.size() == 7);
  std::multiset<std::pair<Vertex, Vertex>> got;
  for (const auto& p : pieces)
    for (const Arc& a : arcs_of_piece(p)) got.insert({a.tail, a.head});
  std::multiset<std::pair<Vertex, Vertex>> want;
  for (const Arc& a : arcs_of_host(HostSpec::kstar_multi(7)))
    want.insert({a.tail, a.head});
  CHECK(got == want);
}

TEST_CASE("inflate rejects other block kinds") {
  UBlock c{UKind::C7, {0, 1, 2, 3, 4, 5, 6}};
  CHECK_THROWS_AS(inflate(std::span<const UBlock>(&c, 1)), UnsupportedBlock);
}
