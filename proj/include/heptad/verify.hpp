#pragma once

#include <span>
#include <string>
#include <vector>

#include "heptad/decomposition.hpp"

namespace heptad {

struct BadBlock {
  int index = 0;
  std::string reason;
  friend bool operator==(const BadBlock&, const BadBlock&) = default;
};

// Undirected failures reuse the arc lists with tail < head.
struct Report {
  bool ok = false;
  std::vector<Arc> missing;
  std::vector<Arc> duplicated;
  std::vector<Arc> foreign;
  std::vector<BadBlock> bad_blocks;
};

// Recomputes the host's arc set from the HostSpec and checks the blocks form
// an exact partition, each block classifying to d.cls. All failures land in
// the report; only a malformed HostSpec throws.
Report verify(const Decomposition& d);

Report verify_undirected(std::span<const UBlock> blocks, const HostSpec& host);

std::string diagnose(const Decomposition& d);
std::string diagnose_undirected(std::span<const UBlock> blocks,
                                const HostSpec& host);

}  // namespace heptad
