#pragma once

#include <array>
#include <utility>
#include <vector>

#include "heptad/hosts.hpp"

namespace heptad {

// Base triangle {0, a, a+b} developed mod m covers the difference classes
// a, b, and c, where a + b = c or a + b + c = m.
struct DiffTriple {
  int a = 0;
  int b = 0;
  int c = 0;
  int modulus = 0;
  friend bool operator==(const DiffTriple&, const DiffTriple&) = default;
};

// Partitions the difference set into valid triples by exhaustive
// backtracking. Throws Exhausted when no partition exists or the node
// budget runs out.
std::vector<DiffTriple> difference_triples(std::vector<int> diffs, int m,
                                           long node_budget = 10'000'000);

// Splits the difference-d circulant of Z_m into perfect matchings: the half
// difference d = m/2 gives one, classes with even cycle length give two.
// Throws NotSplittable when the cycles are odd.
std::vector<OneFactor> one_factor_split(int d, int m);

// Steiner triple system on n points, n = 1 or 3 (mod 6).
std::vector<UBlock> sts(int n);

// Pairwise balanced design on n points, n odd: a Steiner triple system, or
// for n = 5 (mod 6) triangles plus exactly one 5-clique.
std::vector<UBlock> pbd35(int n);

// {K3,K5}-decomposition of K_n minus a one-factor, n even, n >= 6.
std::pair<std::vector<UBlock>, OneFactor> k3k5_even(int n);

// The three Hamiltonian 7-cycles of the K_7 on the given labels.
std::vector<UBlock> walecki7(const std::array<Vertex, 7>& labels);

// 7-cycle decomposition of K_v, v = 1 or 7 (mod 14).
std::vector<UBlock> c7_complete(int v);

// 7-cycle decomposition of K_{n x 7} in range layout, n odd, n >= 3.
std::vector<UBlock> c7_multipartite(int n);

}  // namespace heptad
