#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heptad/catalog.hpp"

namespace heptad {

// Unordered pair, always stored (min, max).
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Perfect matching on the host's vertex set.
struct OneFactor {
  std::vector<Edge> pairs;
  friend bool operator==(const OneFactor&, const OneFactor&) = default;
};

enum class HostKind {
  Kstar,                 // complete symmetric digraph on v vertices
  KstarMultipartite,     // complete symmetric multipartite digraph
  KstarEvenMinusFactor,  // K*_{(2x)x7} minus the x paired K*_{7,7}
  K,                     // complete graph
  KMultipartite,         // complete multipartite graph
  KMinusFactor,          // complete graph minus a one-factor
};

// How labels 0..N-1 are assigned to parts of a multipartite host: contiguous
// ranges of equal size, or residue classes mod the part count.
enum class Layout { Ranges, Residues };

std::string layout_name(Layout l);
Layout layout_from_name(const std::string& s);

struct HostSpec {
  HostKind kind = HostKind::Kstar;
  int v = 0;                // Kstar, K, KMinusFactor
  std::vector<int> parts;   // part sizes, multipartite kinds
  int x = 0;                // KstarEvenMinusFactor: 2x parts of size 7
  Layout layout = Layout::Ranges;
  OneFactor factor;         // KMinusFactor only

  static HostSpec kstar(int v);
  static HostSpec kstar_multi(int nparts, Layout layout = Layout::Ranges);
  static HostSpec kstar_even_minus_factor(int x);
  static HostSpec complete(int v);
  static HostSpec k_multi(int nparts, Layout layout = Layout::Ranges);
  static HostSpec k_minus_factor(int v, OneFactor f);

  int order() const;
  bool directed() const;
  // Part index of a label, or -1 for complete kinds.
  int part_of(Vertex a) const;
  // True when the pair {a,b} carries arcs/edges in this host.
  bool admissible_pair(Vertex a, Vertex b) const;
  std::string key() const;  // short display form, e.g. "Kstar(14)"

  friend bool operator==(const HostSpec&, const HostSpec&) = default;
};

void validate_host(const HostSpec& h);  // throws InvalidHost

// Both return pairs in ascending label order; throws InvalidHost when the
// spec is malformed or the kind has the wrong directedness.
std::vector<Arc> arcs_of_host(const HostSpec& h);
std::vector<Edge> edges_of_host(const HostSpec& h);

long long arc_count_of_host(const HostSpec& h);

// Undirected block kinds used by the quotient constructions.
enum class UKind { K3, K5, C7, I };

std::string ukind_name(UKind k);
UKind ukind_from_name(const std::string& s);

struct UBlock {
  UKind kind = UKind::K3;
  std::vector<Vertex> labels;  // C7 labels are in cyclic order
  friend bool operator==(const UBlock&, const UBlock&) = default;
};

std::vector<Edge> edges_of_ublock(const UBlock& b);  // throws InvalidBlock

// Groups of seven labels plus an optional extra point, as used by the
// assembly constructions.
struct GroupLayout {
  std::vector<std::array<Vertex, 7>> groups;
  std::optional<Vertex> infinity;
};

// Weight-7 inflation of a quotient block: point q of the block occupies
// labels 7q..7q+6.
struct InflatedPiece {
  UBlock base;
  std::vector<std::array<Vertex, 7>> groups;  // one group per base label
};

// Inflate triangles and 5-cliques; any other kind throws UnsupportedBlock.
std::vector<InflatedPiece> inflate(std::span<const UBlock> quotient_blocks);

// All arcs between distinct groups of one piece.
std::vector<Arc> arcs_of_piece(const InflatedPiece& p);

}  // namespace heptad
