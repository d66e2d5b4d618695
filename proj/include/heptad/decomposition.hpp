#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heptad/catalog.hpp"
#include "heptad/hosts.hpp"

namespace heptad {

// One step of a construction, with ordered parameters. Leaves are fixtures
// or quotient providers; inner nodes are the assembly steps.
struct PlanNode {
  std::string step;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<PlanNode> children;
  friend bool operator==(const PlanNode&, const PlanNode&) = default;
};

struct Decomposition {
  HostSpec host;
  int cls = 0;
  std::vector<Block> blocks;
  PlanNode trace;
};

// Undirected counterpart (triangle/clique/cycle/factor-edge blocks).
struct UDecomposition {
  HostSpec host;
  std::vector<UBlock> blocks;
};

}  // namespace heptad
