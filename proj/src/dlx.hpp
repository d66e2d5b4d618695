#pragma once

#include <vector>

namespace heptad::detail {

struct CoverResult {
  bool found = false;
  bool budget_hit = false;
  std::vector<int> rows;  // indices into the input row list
};

// First exact cover of columns 0..ncols-1 by the given rows, searched with
// dancing links. Column choice is minimum count with leftmost tie-break;
// rows are tried in insertion order, so the result is deterministic. Each
// row trial costs one node.
CoverResult exact_cover(int ncols, const std::vector<std::vector<int>>& rows,
                        long node_budget);

}  // namespace heptad::detail
