#include "heptad/hosts.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "heptad/errors.hpp"

namespace heptad {

std::string layout_name(Layout l) {
  return l == Layout::Ranges ? "ranges" : "residues";
}

Layout layout_from_name(const std::string& s) {
  if (s == "ranges") return Layout::Ranges;
  if (s == "residues") return Layout::Residues;
  throw ParseError("unknown layout: '" + s + "'");
}

HostSpec HostSpec::kstar(int v) {
  HostSpec h;
  h.kind = HostKind::Kstar;
  h.v = v;
  return h;
}

HostSpec HostSpec::kstar_multi(int nparts, Layout layout) {
  HostSpec h;
  h.kind = HostKind::KstarMultipartite;
  h.parts.assign(size_t(std::max(nparts, 0)), 7);
  h.layout = layout;
  return h;
}

HostSpec HostSpec::kstar_even_minus_factor(int x) {
  HostSpec h;
  h.kind = HostKind::KstarEvenMinusFactor;
  h.x = x;
  h.parts.assign(size_t(std::max(2 * x, 0)), 7);
  return h;
}

HostSpec HostSpec::complete(int v) {
  HostSpec h;
  h.kind = HostKind::K;
  h.v = v;
  return h;
}

HostSpec HostSpec::k_multi(int nparts, Layout layout) {
  HostSpec h;
  h.kind = HostKind::KMultipartite;
  h.parts.assign(size_t(std::max(nparts, 0)), 7);
  h.layout = layout;
  return h;
}

HostSpec HostSpec::k_minus_factor(int v, OneFactor f) {
  HostSpec h;
  h.kind = HostKind::KMinusFactor;
  h.v = v;
  h.factor = std::move(f);
  return h;
}

int HostSpec::order() const {
  switch (kind) {
    case HostKind::Kstar:
    case HostKind::K:
    case HostKind::KMinusFactor:
      return v;
    case HostKind::KstarMultipartite:
    case HostKind::KstarEvenMinusFactor:
    case HostKind::KMultipartite:
      return std::accumulate(parts.begin(), parts.end(), 0);
  }
  return 0;
}

bool HostSpec::directed() const {
  switch (kind) {
    case HostKind::Kstar:
    case HostKind::KstarMultipartite:
    case HostKind::KstarEvenMinusFactor:
      return true;
    default:
      return false;
  }
}

int HostSpec::part_of(Vertex a) const {
  if (parts.empty()) return -1;
  if (layout == Layout::Residues) return a % int(parts.size());
  int cum = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    cum += parts[i];
    if (a < cum) return int(i);
  }
  return -1;
}

bool HostSpec::admissible_pair(Vertex a, Vertex b) const {
  if (a == b) return false;
  switch (kind) {
    case HostKind::Kstar:
    case HostKind::K:
      return true;
    case HostKind::KMinusFactor: {
      Edge e = make_edge(a, b);
      return std::find(factor.pairs.begin(), factor.pairs.end(), e) ==
             factor.pairs.end();
    }
    case HostKind::KstarMultipartite:
    case HostKind::KMultipartite:
      return part_of(a) != part_of(b);
    case HostKind::KstarEvenMinusFactor: {
      int pa = part_of(a), pb = part_of(b);
      if (pa == pb) return false;
      return pa / 2 != pb / 2;  // parts 2j, 2j+1 are the removed pairing
    }
  }
  return false;
}

std::string HostSpec::key() const {
  switch (kind) {
    case HostKind::Kstar:
      return "Kstar(" + std::to_string(v) + ")";
    case HostKind::K:
      return "K(" + std::to_string(v) + ")";
    case HostKind::KMinusFactor:
      return "KMinusFactor(" + std::to_string(v) + ")";
    case HostKind::KstarMultipartite:
      return "Kstar(" + std::to_string(parts.size()) + "x7," +
             layout_name(layout) + ")";
    case HostKind::KMultipartite:
      return "K(" + std::to_string(parts.size()) + "x7," +
             layout_name(layout) + ")";
    case HostKind::KstarEvenMinusFactor:
      return "KstarEvenMinusFactor(x=" + std::to_string(x) + ")";
  }
  return "?";
}

void validate_host(const HostSpec& h) {
  switch (h.kind) {
    case HostKind::Kstar:
    case HostKind::K:
      if (h.v < 0) throw InvalidHost("negative order");
      return;
    case HostKind::KstarMultipartite:
    case HostKind::KMultipartite: {
      if (h.parts.empty()) throw InvalidHost("multipartite host needs parts");
      for (int s : h.parts)
        if (s < 1) throw InvalidHost("part sizes must be positive");
      if (h.layout == Layout::Residues)
        for (int s : h.parts)
          if (s != h.parts[0])
            throw InvalidHost("residue layout needs uniform part sizes");
      return;
    }
    case HostKind::KstarEvenMinusFactor: {
      if (h.x < 1) throw InvalidHost("needs at least one pair of parts");
      if (int(h.parts.size()) != 2 * h.x)
        throw InvalidHost("expected 2x parts");
      for (int s : h.parts)
        if (s != 7) throw InvalidHost("parts must have size 7");
      return;
    }
    case HostKind::KMinusFactor: {
      if (h.v < 2 || h.v % 2 != 0)
        throw InvalidHost("one-factor needs a positive even order");
      std::set<Vertex> seen;
      for (const Edge& e : h.factor.pairs) {
        if (e.first < 0 || e.second >= h.v || e.first >= e.second)
          throw InvalidHost("factor pair out of range");
        if (!seen.insert(e.first).second || !seen.insert(e.second).second)
          throw InvalidHost("factor pairs overlap");
      }
      if (int(seen.size()) != h.v)
        throw InvalidHost("factor does not cover the vertex set");
      return;
    }
  }
}

std::vector<Arc> arcs_of_host(const HostSpec& h) {
  validate_host(h);
  if (!h.directed()) throw InvalidHost("undirected host has edges, not arcs");
  const int n = h.order();
  std::vector<Arc> out;
  out.reserve(size_t(n) * (n > 0 ? size_t(n - 1) : 0));
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (h.admissible_pair(a, b)) out.push_back(Arc{a, b});
  return out;
}

std::vector<Edge> edges_of_host(const HostSpec& h) {
  validate_host(h);
  if (h.directed()) throw InvalidHost("directed host has arcs, not edges");
  const int n = h.order();
  std::vector<Edge> out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (h.admissible_pair(a, b)) out.push_back(Edge{a, b});
  return out;
}

long long arc_count_of_host(const HostSpec& h) {
  validate_host(h);
  long long n = h.order();
  switch (h.kind) {
    case HostKind::Kstar:
      return n * (n - 1);
    case HostKind::K:
      return n * (n - 1) / 2;
    case HostKind::KMinusFactor:
      return n * (n - 1) / 2 - n / 2;
    case HostKind::KstarMultipartite:
      return n * (n - 7);
    case HostKind::KMultipartite:
      return n * (n - 7) / 2;
    case HostKind::KstarEvenMinusFactor:
      return n * (n - 7) - 98LL * h.x;
  }
  return 0;
}

std::string ukind_name(UKind k) {
  switch (k) {
    case UKind::K3: return "K3";
    case UKind::K5: return "K5";
    case UKind::C7: return "C7";
    case UKind::I: return "I";
  }
  return "?";
}

UKind ukind_from_name(const std::string& s) {
  if (s == "K3") return UKind::K3;
  if (s == "K5") return UKind::K5;
  if (s == "C7") return UKind::C7;
  if (s == "I") return UKind::I;
  throw ParseError("unknown block kind: '" + s + "'");
}

std::vector<Edge> edges_of_ublock(const UBlock& b) {
  size_t want = 0;
  switch (b.kind) {
    case UKind::K3: want = 3; break;
    case UKind::K5: want = 5; break;
    case UKind::C7: want = 7; break;
    case UKind::I: want = 2; break;
  }
  if (b.labels.size() != want)
    throw InvalidBlock(ukind_name(b.kind) + " block needs " +
                       std::to_string(want) + " labels");
  for (size_t i = 0; i < b.labels.size(); ++i)
    for (size_t j = i + 1; j < b.labels.size(); ++j)
      if (b.labels[i] == b.labels[j])
        throw InvalidBlock("block labels not distinct");
  std::vector<Edge> out;
  if (b.kind == UKind::C7) {
    for (size_t i = 0; i < 7; ++i)
      out.push_back(make_edge(b.labels[i], b.labels[(i + 1) % 7]));
  } else {
    for (size_t i = 0; i < b.labels.size(); ++i)
      for (size_t j = i + 1; j < b.labels.size(); ++j)
        out.push_back(make_edge(b.labels[i], b.labels[j]));
  }
  return out;
}

std::vector<InflatedPiece> inflate(std::span<const UBlock> quotient_blocks) {
  std::vector<InflatedPiece> out;
  out.reserve(quotient_blocks.size());
  for (const UBlock& b : quotient_blocks) {
    if (b.kind != UKind::K3 && b.kind != UKind::K5)
      throw UnsupportedBlock("inflate handles K3 and K5 blocks only");
    edges_of_ublock(b);  // validates labels
    InflatedPiece p;
    p.base = b;
    for (Vertex q : b.labels) {
      std::array<Vertex, 7> g{};
      for (int i = 0; i < 7; ++i) g[i] = 7 * q + i;
      p.groups.push_back(g);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Arc> arcs_of_piece(const InflatedPiece& p) {
  std::vector<Arc> out;
  for (size_t gi = 0; gi < p.groups.size(); ++gi)
    for (size_t gj = 0; gj < p.groups.size(); ++gj) {
      if (gi == gj) continue;
      for (Vertex a : p.groups[gi])
        for (Vertex b : p.groups[gj]) out.push_back(Arc{a, b});
    }
  return out;
}

}  // namespace heptad
