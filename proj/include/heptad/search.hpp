#pragma once

#include <span>
#include <vector>

#include "heptad/decomposition.hpp"
#include "heptad/develop.hpp"
#include "heptad/fixtures.hpp"
#include "heptad/hosts.hpp"

namespace heptad {

// Orbit lengths requested for each starter, in emission order. Supported
// lengths are the full modulus and 1; length 1 asks for a translation-fixed
// constant-difference cycle, which only exists over Z_7.
struct OrbitProfile {
  int modulus = 0;
  bool has_infinity = false;
  std::vector<int> orbits;
  friend bool operator==(const OrbitProfile&, const OrbitProfile&) = default;
};

struct SearchBudget {
  long nodes = 10'000'000;
  int seed = 0;  // branch order; 0 is the canonical ascending order
};

// Backtracking over starter labelings with difference-class pruning: each
// full-orbit starter consumes one whole difference class per arc, with the
// arcs into and out of the fixed point acting as two extra classes. Class
// kCycleClass searches orientation-free cycles over an undirected host.
// The returned set is develop-and-verify checked; throws Exhausted when the
// space or the node budget runs out.
StarterSet find_starters(const HostSpec& host, int cls,
                         const OrbitProfile& profile,
                         const SearchBudget& budget = {});

// First exact cover of the host's arcs (edges) by blocks of the given class
// (kinds), in deterministic column/row order, verified before return.
// Hosts above 2000 arcs are refused with HostTooLarge.
Decomposition exact_cover_small(const HostSpec& host, int cls,
                                const SearchBudget& budget = {});
UDecomposition exact_cover_small(const HostSpec& host,
                                 std::span<const UKind> kinds,
                                 const SearchBudget& budget = {});

// Re-derives one of the frozen search fixtures, trying orbit profiles in a
// fixed order: full orbits over Z_N, then Z_{N-1} plus the fixed point, then
// mixed profiles with translation-fixed cycles. Returns the first verified
// record; throws Exhausted when none is found.
FixtureRecord derive_fixture(const HostSpec& host, int cls);

}  // namespace heptad
