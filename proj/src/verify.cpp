#include "heptad/verify.hpp"

#include <algorithm>
#include <sstream>

#include "heptad/errors.hpp"

namespace heptad {
namespace {

// Multiset comparison over sorted arc lists. Host arcs are distinct by
// construction; block arcs may repeat.
void diff_arcs(std::vector<Arc>& host_arcs, std::vector<Arc>& block_arcs,
               Report& r) {
  std::sort(host_arcs.begin(), host_arcs.end());
  std::sort(block_arcs.begin(), block_arcs.end());
  size_t i = 0, j = 0;
  while (i < host_arcs.size() || j < block_arcs.size()) {
    if (j == block_arcs.size() ||
        (i < host_arcs.size() && host_arcs[i] < block_arcs[j])) {
      r.missing.push_back(host_arcs[i]);
      ++i;
      continue;
    }
    if (i == host_arcs.size() || block_arcs[j] < host_arcs[i]) {
      const Arc a = block_arcs[j];
      if (r.foreign.empty() || !(r.foreign.back() == a)) r.foreign.push_back(a);
      ++j;
      continue;
    }
    // equal: consume the host copy and any extra block copies
    const Arc a = host_arcs[i];
    ++i;
    ++j;
    if (j < block_arcs.size() && block_arcs[j] == a) {
      r.duplicated.push_back(a);
      while (j < block_arcs.size() && block_arcs[j] == a) ++j;
    }
  }
}

void finish(Report& r) {
  r.ok = r.missing.empty() && r.duplicated.empty() && r.foreign.empty() &&
         r.bad_blocks.empty();
}

std::string render(const Report& r, size_t blocks, size_t host_arcs,
                   const char* pair_word) {
  std::ostringstream os;
  if (r.ok) {
    os << "OK: " << blocks << " blocks, " << host_arcs << " " << pair_word;
    return os.str();
  }
  os << "FAIL: " << r.missing.size() << " missing, " << r.duplicated.size()
     << " duplicated, " << r.foreign.size() << " foreign, "
     << r.bad_blocks.size() << " bad blocks";
  auto list = [&](const char* name, const std::vector<Arc>& arcs) {
    if (arcs.empty()) return;
    os << "\n" << name << ":";
    size_t shown = std::min<size_t>(arcs.size(), 20);
    for (size_t i = 0; i < shown; ++i)
      os << " (" << arcs[i].tail << "," << arcs[i].head << ")";
    if (arcs.size() > shown) os << " ... and " << (arcs.size() - shown) << " more";
  };
  list("missing", r.missing);
  list("duplicated", r.duplicated);
  list("foreign", r.foreign);
  for (const BadBlock& b : r.bad_blocks)
    os << "\nblock " << b.index << ": " << b.reason;
  return os.str();
}

}  // namespace

Report verify(const Decomposition& d) {
  validate_host(d.host);
  Report r;
  if (!d.host.directed()) {
    r.bad_blocks.push_back({-1, "directed blocks on an undirected host"});
    finish(r);
    return r;
  }
  const int n = d.host.order();
  std::vector<Arc> host_arcs = arcs_of_host(d.host);
  std::vector<Arc> block_arcs;
  block_arcs.reserve(d.blocks.size() * 7);
  for (size_t i = 0; i < d.blocks.size(); ++i) {
    const Block& b = d.blocks[i];
    bool in_range = true;
    for (Vertex l : b.labels)
      if (l < 0 || l >= n) in_range = false;
    if (!in_range) {
      r.bad_blocks.push_back({int(i), "label out of range"});
      continue;
    }
    std::array<Arc, 7> arcs;
    try {
      arcs = arcs_of_block(b);
    } catch (const InvalidBlock& e) {
      r.bad_blocks.push_back({int(i), e.what()});
      continue;
    }
    auto witness = classify_arcs(arcs);
    if (!witness || witness->cls != d.cls) {
      r.bad_blocks.push_back(
          {int(i), "block is " + (witness ? class_name(witness->cls)
                                          : std::string("not a heptagon")) +
                       ", expected " + class_name(d.cls)});
      continue;
    }
    block_arcs.insert(block_arcs.end(), arcs.begin(), arcs.end());
  }
  diff_arcs(host_arcs, block_arcs, r);
  finish(r);
  return r;
}

Report verify_undirected(std::span<const UBlock> blocks, const HostSpec& host) {
  validate_host(host);
  Report r;
  if (host.directed()) {
    r.bad_blocks.push_back({-1, "undirected blocks on a directed host"});
    finish(r);
    return r;
  }
  const int n = host.order();
  std::vector<Arc> host_arcs;
  for (const Edge& e : edges_of_host(host))
    host_arcs.push_back(Arc{e.first, e.second});
  std::vector<Arc> block_arcs;
  for (size_t i = 0; i < blocks.size(); ++i) {
    std::vector<Edge> edges;
    try {
      edges = edges_of_ublock(blocks[i]);
    } catch (const InvalidBlock& e) {
      r.bad_blocks.push_back({int(i), e.what()});
      continue;
    }
    bool in_range = true;
    for (Vertex l : blocks[i].labels)
      if (l < 0 || l >= n) in_range = false;
    if (!in_range) {
      r.bad_blocks.push_back({int(i), "label out of range"});
      continue;
    }
    for (const Edge& e : edges) block_arcs.push_back(Arc{e.first, e.second});
  }
  diff_arcs(host_arcs, block_arcs, r);
  finish(r);
  return r;
}

std::string diagnose(const Decomposition& d) {
  Report r = verify(d);
  return render(r, d.blocks.size(), size_t(arc_count_of_host(d.host)), "arcs");
}

std::string diagnose_undirected(std::span<const UBlock> blocks,
                                const HostSpec& host) {
  Report r = verify_undirected(blocks, host);
  return render(r, blocks.size(), size_t(arc_count_of_host(host)), "edges");
}

}  // namespace heptad
