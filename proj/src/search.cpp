#include "heptad/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "dlx.hpp"
#include "heptad/certio.hpp"
#include "heptad/errors.hpp"
#include "heptad/verify.hpp"

namespace heptad {

namespace {

// Arc pattern of a class expressed as position pairs: labeling positions
// with themselves turns block arcs into position arcs.
std::array<Arc, 7> position_arcs(int cls) {
  return arcs_of_block(Block{cls, {0, 1, 2, 3, 4, 5, 6}});
}

std::array<std::pair<int, int>, 7> cycle_position_edges() {
  std::array<std::pair<int, int>, 7> out{};
  for (int j = 0; j < 7; ++j) out[size_t(j)] = {j, (j + 1) % 7};
  return out;
}

struct StarterSearch {
  int m = 0;
  bool directed = true;
  bool has_infinity = false;
  int nparts = 0;  // 0 for complete hosts
  int cls = 0;
  long nodes = 0;
  long node_limit = 0;

  std::array<std::pair<int, int>, 7> pattern{};
  std::vector<char> class_free;  // finite classes, indexed by class id
  bool in_free = true, out_free = true;

  const HostSpec* host = nullptr;
  std::vector<int> orbits;
  std::vector<Starter> acc;
  StarterSet found;
  bool done = false;

  int finite_class(int from, int to) const {
    int d = ((to - from) % m + m) % m;
    if (!directed) d = std::min(d, m - d);
    return d;
  }

  void tick() {
    if (++nodes > node_limit)
      throw Exhausted("starter search exceeded the node budget", true);
  }

  bool verify_acc() {
    StarterSet ss;
    ss.modulus = m;
    ss.has_infinity = has_infinity;
    ss.starters = acc;
    Report rep;
    if (cls == kCycleClass) {
      rep = verify_undirected(develop_cycles(ss), *host);
    } else {
      Decomposition d;
      d.host = *host;
      d.cls = cls;
      d.blocks = develop(ss);
      rep = verify(d);
    }
    if (!rep.ok) return false;
    found = std::move(ss);
    done = true;
    return true;
  }

  void next_starter(size_t index) {
    if (done) return;
    if (index == orbits.size()) {
      verify_acc();
      return;
    }
    if (orbits[index] == 1)
      fixed_cycle(index);
    else
      full_orbit(index);
  }

  // Translation-fixed starter: a constant-difference cycle over Z_7.
  void fixed_cycle(size_t index) {
    if (directed && cls != 10) return;  // constant difference is all-forward
    int top = int(class_free.size()) - 1;
    for (int d = 1; d <= top && !done; ++d) {
      if (!class_free[size_t(d)]) continue;
      tick();
      Block b;
      b.cls = cls;
      for (int j = 0; j < 7; ++j) b.labels[size_t(j)] = (j * d) % m;
      class_free[size_t(d)] = 0;
      acc.push_back(Starter{b, 1});
      next_starter(index + 1);
      acc.pop_back();
      class_free[size_t(d)] = 1;
    }
  }

  void full_orbit(size_t index) {
    std::array<Vertex, 7> lab{};
    std::array<char, 7> is_inf{};
    place(index, 0, lab, is_inf, false, false);
  }

  // Newly completed pattern arcs when position j receives its label.
  template <typename Fn>
  void completed_arcs(int j, Fn&& fn) const {
    for (const auto& pr : pattern) {
      int hi = std::max(pr.first, pr.second);
      if (hi == j) fn(pr.first, pr.second);
    }
  }

  void place(size_t index, int j, std::array<Vertex, 7>& lab,
             std::array<char, 7>& is_inf, bool finite_seen, bool inf_used) {
    if (done) return;
    if (j == 7) {
      Block b;
      b.cls = cls;
      for (int p = 0; p < 7; ++p)
        b.labels[size_t(p)] = is_inf[size_t(p)] ? kInf : lab[size_t(p)];
      acc.push_back(Starter{b, m});
      next_starter(index + 1);
      acc.pop_back();
      return;
    }
    // finite candidates; the first finite slot is fixed to 0 by translation
    int upper = finite_seen ? m : 1;
    for (int x = 0; x < upper && !done; ++x) {
      bool used = false;
      for (int p = 0; p < j; ++p)
        if (!is_inf[size_t(p)] && lab[size_t(p)] == x) used = true;
      if (used) continue;
      lab[size_t(j)] = x;
      is_inf[size_t(j)] = 0;
      try_place(index, j, lab, is_inf, true, inf_used);
    }
    if (has_infinity && !inf_used && in_free && out_free && !done) {
      is_inf[size_t(j)] = 1;
      try_place(index, j, lab, is_inf, finite_seen, true);
      is_inf[size_t(j)] = 0;
    }
  }

  void try_place(size_t index, int j, std::array<Vertex, 7>& lab,
                 std::array<char, 7>& is_inf, bool finite_seen,
                 bool inf_used) {
    tick();
    std::vector<int> taken;
    bool took_in = false, took_out = false;
    bool ok = true;
    completed_arcs(j, [&](int p, int q) {
      if (!ok) return;
      bool pi = is_inf[size_t(p)], qi = is_inf[size_t(q)];
      if (pi && qi) {
        ok = false;
      } else if (pi) {
        if (!out_free || took_out) ok = false;
        else took_out = true;
      } else if (qi) {
        if (!in_free || took_in) ok = false;
        else took_in = true;
      } else {
        int d = finite_class(lab[size_t(p)], lab[size_t(q)]);
        if (nparts > 0 && d % nparts == 0) {
          ok = false;
        } else if (!class_free[size_t(d)] ||
                   std::find(taken.begin(), taken.end(), d) != taken.end()) {
          ok = false;
        } else {
          taken.push_back(d);
        }
      }
    });
    if (ok) {
      for (int d : taken) class_free[size_t(d)] = 0;
      if (took_in) in_free = false;
      if (took_out) out_free = false;
      place(index, j + 1, lab, is_inf, finite_seen, inf_used);
      for (int d : taken) class_free[size_t(d)] = 1;
      if (took_in) in_free = true;
      if (took_out) out_free = true;
    }
  }
};

#include "search_layered.inc"

}  // namespace

StarterSet find_starters(const HostSpec& host, int cls,
                         const OrbitProfile& profile,
                         const SearchBudget& budget) {
  validate_host(host);
  bool cycles = cls == kCycleClass;
  if (!cycles && !class_valid(cls)) throw Error("unknown class");
  if (cycles == host.directed())
    throw Error("class and host directedness disagree");

  int nparts = 0;
  switch (host.kind) {
    case HostKind::Kstar:
    case HostKind::K:
      break;
    case HostKind::KstarMultipartite:
    case HostKind::KMultipartite:
      if (host.layout != Layout::Residues)
        throw Error("starter search needs a residue layout");
      nparts = int(host.parts.size());
      break;
    default:
      throw Error("unsupported host kind for starter search");
  }

  int m = profile.modulus;
  if (m + (profile.has_infinity ? 1 : 0) != host.order())
    throw Error("profile modulus does not match the host order");
  if (profile.has_infinity && (cycles || nparts > 0))
    throw Error("fixed point only supported over complete directed hosts");
  if (!cycles && m < 2) throw Error("modulus too small");
  if (cycles && m % 2 == 0)
    throw Error("cycle search needs an odd modulus");

  long long blocks = 0;
  for (int o : profile.orbits) {
    if (o != m && o != 1) throw Error("unsupported orbit length");
    if (o == 1 && m != 7)
      throw Error("translation-fixed starters need modulus 7");
    blocks += o;
  }
  if (blocks * 7 != arc_count_of_host(host))
    throw Exhausted("orbit profile does not cover the host", false);

  // All-forward blocks telescope: a finite cycle's differences sum to 0
  // mod m while the cycle through the fixed point sums to a nonzero value,
  // so with full orbits only the total of the admissible classes decides.
  if (cls == 10 &&
      std::find(profile.orbits.begin(), profile.orbits.end(), 1) ==
          profile.orbits.end()) {
    long long total = 0;
    for (int d = 1; d < m; ++d)
      if (nparts == 0 || d % nparts != 0) total += d;
    bool zero = total % m == 0;
    if (zero == profile.has_infinity)
      throw Exhausted("class totals rule out an all-forward starter set",
                      false);
  }

  StarterSearch s;
  s.m = m;
  s.directed = !cycles;
  s.has_infinity = profile.has_infinity;
  s.nparts = nparts;
  s.cls = cls;
  s.node_limit = budget.nodes;
  s.host = &host;
  s.orbits = profile.orbits;
  if (cycles) {
    auto edges = cycle_position_edges();
    for (int j = 0; j < 7; ++j) s.pattern[size_t(j)] = edges[size_t(j)];
  } else {
    auto arcs = position_arcs(cls);
    for (int j = 0; j < 7; ++j)
      s.pattern[size_t(j)] = {arcs[size_t(j)].tail, arcs[size_t(j)].head};
  }
  int top_class = cycles ? (m - 1) / 2 : m - 1;
  s.class_free.assign(size_t(top_class) + 1, 1);
  s.class_free[0] = 0;

  s.next_starter(0);
  if (!s.done)
    throw Exhausted("no starter set exists for this profile", false);
  return s.found;
}

namespace {

long long column_count_guard(const HostSpec& host) {
  long long n = arc_count_of_host(host);
  if (n > 2000)
    throw HostTooLarge(host.key() + " has " + std::to_string(n) +
                       " arcs; exact cover is capped at 2000");
  return n;
}

}  // namespace

Decomposition exact_cover_small(const HostSpec& host, int cls,
                                const SearchBudget& budget) {
  validate_host(host);
  if (!host.directed()) throw Error("directed class over an undirected host");
  if (!class_valid(cls)) throw Error("unknown class");
  column_count_guard(host);

  std::vector<Arc> arcs = arcs_of_host(host);
  std::map<Arc, int> col;
  for (int i = 0; i < int(arcs.size()); ++i) col[arcs[size_t(i)]] = i;

  int n = host.order();
  std::vector<Block> cands;
  std::vector<std::vector<int>> rows;
  std::vector<Vertex> subset(7);
  std::vector<int> pick(7);
  std::iota(pick.begin(), pick.end(), 0);
  bool more = n >= 7;
  while (more) {
    for (int i = 0; i < 7; ++i) subset[size_t(i)] = pick[size_t(i)];
    std::array<Vertex, 7> perm{};
    std::copy(subset.begin(), subset.end(), perm.begin());
    do {
      // the all-forward class is rotation invariant; keep one rotation
      if (cls == 10 && perm[0] != subset[0]) continue;
      Block b{cls, perm};
      std::vector<int> row;
      bool ok = true;
      for (const Arc& a : arcs_of_block(b)) {
        auto it = col.find(a);
        if (it == col.end()) {
          ok = false;
          break;
        }
        row.push_back(it->second);
      }
      if (!ok) continue;
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
      cands.push_back(b);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // next 7-subset in lexicographic order
    int i = 6;
    while (i >= 0 && pick[size_t(i)] == n - 7 + i) --i;
    if (i < 0) {
      more = false;
    } else {
      ++pick[size_t(i)];
      for (int k = i + 1; k < 7; ++k) pick[size_t(k)] = pick[size_t(k - 1)] + 1;
    }
  }

  detail::CoverResult res =
      detail::exact_cover(int(arcs.size()), rows, budget.nodes);
  if (!res.found)
    throw Exhausted("no exact cover of " + host.key() + " by " +
                        class_name(cls),
                    res.budget_hit);
  std::sort(res.rows.begin(), res.rows.end());
  Decomposition d;
  d.host = host;
  d.cls = cls;
  for (int r : res.rows) d.blocks.push_back(cands[size_t(r)]);
  d.trace = PlanNode{
      "exact_cover", {{"host", host.key()}, {"class", class_name(cls)}}, {}};
  if (!verify(d).ok) throw Error("exact cover produced an invalid design");
  return d;
}

UDecomposition exact_cover_small(const HostSpec& host,
                                 std::span<const UKind> kinds,
                                 const SearchBudget& budget) {
  validate_host(host);
  if (host.directed()) throw Error("block kinds over a directed host");
  column_count_guard(host);

  std::vector<Edge> edges = edges_of_host(host);
  std::map<Edge, int> col;
  for (int i = 0; i < int(edges.size()); ++i) col[edges[size_t(i)]] = i;

  int n = host.order();
  std::vector<UBlock> cands;
  std::vector<std::vector<int>> rows;
  auto add_candidate = [&](UBlock b) {
    std::vector<int> row;
    for (const Edge& e : edges_of_ublock(b)) {
      auto it = col.find(e);
      if (it == col.end()) return;
      row.push_back(it->second);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
    cands.push_back(std::move(b));
  };

  auto subsets = [&](int k, auto&& emit) {
    std::vector<Vertex> pick(size_t(k), 0);
    std::iota(pick.begin(), pick.end(), 0);
    if (n < k) return;
    bool more = true;
    while (more) {
      emit(pick);
      int i = k - 1;
      while (i >= 0 && pick[size_t(i)] == n - k + i) --i;
      if (i < 0) {
        more = false;
      } else {
        ++pick[size_t(i)];
        for (int t = i + 1; t < k; ++t) pick[size_t(t)] = pick[size_t(t - 1)] + 1;
      }
    }
  };

  for (UKind kind : kinds) {
    switch (kind) {
      case UKind::K3:
        subsets(3, [&](const std::vector<Vertex>& p) {
          add_candidate(UBlock{UKind::K3, p});
        });
        break;
      case UKind::K5:
        subsets(5, [&](const std::vector<Vertex>& p) {
          add_candidate(UBlock{UKind::K5, p});
        });
        break;
      case UKind::C7:
        subsets(7, [&](const std::vector<Vertex>& p) {
          // distinct cycles: fix the smallest label first and orient by the
          // smaller neighbor
          std::vector<Vertex> perm = p;
          do {
            if (perm[1] > perm[6]) continue;
            add_candidate(UBlock{UKind::C7, perm});
          } while (std::next_permutation(perm.begin() + 1, perm.end()));
        });
        break;
      case UKind::I:
        throw Error("factor edges are not coverable blocks");
    }
  }

  detail::CoverResult res =
      detail::exact_cover(int(edges.size()), rows, budget.nodes);
  if (!res.found)
    throw Exhausted("no exact cover of " + host.key(), res.budget_hit);
  std::sort(res.rows.begin(), res.rows.end());
  UDecomposition d;
  d.host = host;
  for (int r : res.rows) d.blocks.push_back(cands[size_t(r)]);
  if (!verify_undirected(d.blocks, d.host).ok)
    throw Error("exact cover produced an invalid design");
  return d;
}

FixtureRecord derive_fixture(const HostSpec& host, int cls) {
  auto specs = derived_fixture_specs();
  if (std::find(specs.begin(), specs.end(), std::pair{host, cls}) ==
      specs.end())
    throw Error("not a derived fixture: " + host.key() + " " +
                record_class_name(cls));

  long long blocks = arc_count_of_host(host) / 7;
  int n = host.order();
  std::vector<OrbitProfile> attempts;
  if (blocks % n == 0)
    attempts.push_back(
        {n, false, std::vector<int>(size_t(blocks / n), n)});
  if (host.directed() && host.kind == HostKind::Kstar) {
    int m = n - 1;
    if (blocks % m == 0)
      attempts.push_back(
          {m, true, std::vector<int>(size_t(blocks / m), m)});
    if (m == 7 && blocks % 7 != 0) {
      OrbitProfile p{m, true, {}};
      for (long long i = 0; i < blocks / 7; ++i) p.orbits.push_back(7);
      for (long long i = 0; i < blocks % 7; ++i) p.orbits.push_back(1);
      attempts.push_back(std::move(p));
    }
  }

  for (const OrbitProfile& profile : attempts) {
    StarterSet ss;
    try {
      ss = find_starters(host, cls, profile);
    } catch (const Exhausted&) {
      continue;
    }
    FixtureRecord r;
    r.host = host;
    r.cls = cls;
    r.starters = std::move(ss);
    r.provenance = "search";
    r.sha256 = fixture_checksum(r);
    return r;
  }

  // no single-modulus starter set exists over these hosts; fall back to a
  // layered system stored as translation-fixed starters
  if (host.kind == HostKind::Kstar && cls == 10 && n % 7 == 0 && n >= 14) {
    std::vector<Block> blocks = layered_forward_cycles(n / 7, SearchBudget{}.nodes);
    StarterSet ss;
    ss.modulus = n;
    ss.has_infinity = false;
    for (const Block& b : blocks) ss.starters.push_back(Starter{b, 1});
    Decomposition d;
    d.host = host;
    d.cls = cls;
    d.blocks = develop(ss);
    Report rep = verify(d);
    if (!rep.ok)
      throw Error("layered cycle system failed verification: " +
                  std::to_string(rep.missing.size()) + " missing, " +
                  std::to_string(rep.duplicated.size()) + " duplicated, " +
                  std::to_string(rep.foreign.size()) + " foreign, " +
                  std::to_string(rep.bad_blocks.size()) + " bad blocks");
    FixtureRecord r;
    r.host = host;
    r.cls = cls;
    r.starters = std::move(ss);
    r.provenance = "search";
    r.sha256 = fixture_checksum(r);
    return r;
  }
  throw Exhausted("no fixture profile succeeded for " + host.key(), false);
}

}  // namespace heptad
