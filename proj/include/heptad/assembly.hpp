#pragma once

#include <utility>

#include "heptad/decomposition.hpp"

namespace heptad {

// Orients a seven cycle as a block of the class together with the block
// carrying the opposite orientation of every edge. The two blocks partition
// the 14 arcs over the cycle's edges. Throws NotSelfReverse for D8 and D9,
// whose second orientation falls in the mirror class.
std::pair<Block, Block> double_cycle(const UBlock& cycle, int cls);

// Reverses every arc of a decomposition of a directed host. The class maps
// through reverse_class; the trace gains a "reverse" root.
Decomposition reverse_decomposition(const Decomposition& d);

// The construction tree generate(v, cls) executes, without the blocks.
// Deterministic, so it always equals the trace of the generated design.
// Throws NotAdmissible unless v >= 7 and v = 0 or 1 mod 7.
PlanNode plan(int v, int cls);

// A verified decomposition of K*_v into blocks of class D_cls (1..10).
// Throws NotAdmissible for impossible parameters and VerificationFailure
// if the assembled blocks fail the exact-partition check.
Decomposition generate(int v, int cls);

}  // namespace heptad
