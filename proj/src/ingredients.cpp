#include "heptad/ingredients.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dlx.hpp"
#include "heptad/errors.hpp"
#include "heptad/fixtures.hpp"
#include "heptad/verify.hpp"

namespace heptad {

namespace {

std::vector<UBlock> checked(std::vector<UBlock> blocks, const HostSpec& host) {
  Report rep = verify_undirected(blocks, host);
  if (!rep.ok) throw VerificationFailure("provider output failed verification for " + host.key());
  return blocks;
}

struct TripleSearch {
  int m = 0;
  long nodes = 0;
  long node_limit = 0;
  std::vector<int> pool;  // ascending
  std::vector<bool> used;
  std::vector<DiffTriple> acc;

  bool valid(int a, int b, int c) const {
    return a + b == c || a + b + c == m;
  }

  bool run() {
    size_t i = 0;
    while (i < pool.size() && used[i]) ++i;
    if (i == pool.size()) return true;
    used[i] = true;
    for (size_t j = i + 1; j < pool.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      for (size_t k = j + 1; k < pool.size(); ++k) {
        if (used[k]) continue;
        if (++nodes > node_limit) throw Exhausted("difference triple budget exceeded", true);
        if (!valid(pool[i], pool[j], pool[k])) continue;
        used[k] = true;
        acc.push_back({pool[i], pool[j], pool[k], m});
        if (run()) return true;
        acc.pop_back();
        used[k] = false;
      }
      used[j] = false;
    }
    used[i] = false;
    return false;
  }
};

// Triangles covering the difference classes of one triple, developed mod m.
void emit_triple(const DiffTriple& t, std::vector<UBlock>& out) {
  for (Vertex s = 0; s < t.modulus; ++s) {
    Vertex b = (s + t.a) % t.modulus;
    Vertex c = (s + t.a + t.b) % t.modulus;
    out.push_back({UKind::K3, {s, b, c}});
  }
}

// Exact cover of the non-hole pairs of K_n by triangles with at most one
// point in the hole. Small instances only.
std::vector<UBlock> hole_triangles(int n, int hole_lo) {
  std::vector<int> col(size_t(n) * size_t(n), -1);
  int ncols = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (a >= hole_lo && b >= hole_lo) continue;
      col[size_t(a) * size_t(n) + size_t(b)] = ncols++;
    }
  auto pair_col = [&](int a, int b) { return col[size_t(std::min(a, b)) * size_t(n) + size_t(std::max(a, b))]; };
  std::vector<std::vector<int>> rows;
  std::vector<UBlock> cand;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int inside = (a >= hole_lo) + (b >= hole_lo) + (c >= hole_lo);
        if (inside > 1) continue;
        rows.push_back({pair_col(a, b), pair_col(a, c), pair_col(b, c)});
        std::sort(rows.back().begin(), rows.back().end());
        cand.push_back({UKind::K3, {a, b, c}});
      }
  detail::CoverResult res = detail::exact_cover(ncols, rows, 10'000'000);
  if (!res.found) throw Exhausted("no triangle cover around the hole", res.budget_hit);
  std::vector<UBlock> out;
  for (int r : res.rows) out.push_back(cand[size_t(r)]);
  return out;
}

// Hole construction over Z_m, m = n - 5: a 5-clique on the hole, one
// matching of Z_m joined to each hole point, difference triples on the rest.
std::vector<UBlock> pbd_hole(int n) {
  int m = n - 5;
  std::vector<UBlock> blocks;
  blocks.push_back({UKind::K5, {m, m + 1, m + 2, m + 3, m + 4}});
  if (n == 11) {
    std::vector<UBlock> tris = hole_triangles(n, m);
    blocks.insert(blocks.end(), tris.begin(), tris.end());
    return blocks;
  }
  std::vector<int> splittable;
  for (int d = 1; d < m / 2; ++d)
    if ((m / std::gcd(d, m)) % 2 == 0) splittable.push_back(d);
  for (size_t i = 0; i < splittable.size(); ++i)
    for (size_t j = i + 1; j < splittable.size(); ++j) {
      int d1 = splittable[i], d2 = splittable[j];
      std::vector<int> rest;
      for (int d = 1; d < m / 2; ++d)
        if (d != d1 && d != d2) rest.push_back(d);
      std::vector<DiffTriple> triples;
      try {
        triples = difference_triples(rest, m);
      } catch (const Exhausted&) {
        continue;
      }
      std::vector<OneFactor> factors = one_factor_split(m / 2, m);
      for (int d : {d1, d2})
        for (OneFactor& f : one_factor_split(d, m)) factors.push_back(std::move(f));
      for (size_t h = 0; h < 5; ++h)
        for (const Edge& e : factors[h].pairs)
          blocks.push_back({UKind::K3, {e.first, e.second, Vertex(m + int(h))}});
      for (const DiffTriple& t : triples) emit_triple(t, blocks);
      return blocks;
    }
  throw Exhausted("no matching split covers the hole of " + std::to_string(n), false);
}

// Fallback for m = 6 (mod 24), where no two whole difference classes split
// into the four matchings the hole construction needs: u groups of six
// points share the hole through copies of the 11-point design, and a
// doubled cyclic triangle system over Z_3u covers the cross-group pairs.
std::vector<UBlock> pbd_groups(int n) {
  int m = n - 5;
  int u = m / 6;
  std::vector<UBlock> piece;
  for (const UBlock& b : pbd35(11))
    if (b.kind == UKind::K3) piece.push_back(b);
  std::vector<UBlock> blocks;
  blocks.push_back({UKind::K5, {m, m + 1, m + 2, m + 3, m + 4}});
  for (int g = 0; g < u; ++g)
    for (UBlock b : piece) {
      for (Vertex& x : b.labels) x = x < 6 ? Vertex(6 * g + x) : Vertex(m + (x - 6));
      blocks.push_back(std::move(b));
    }
  // Groups {i, i+u, i+2u} of Z_3u; the class u stays within groups.
  std::vector<int> cross;
  for (int d = 1; 2 * d < 3 * u; ++d)
    if (d != u) cross.push_back(d);
  auto pair_labels = [&](int y) {
    return std::array<Vertex, 2>{Vertex(6 * (y % u) + 2 * (y / u)),
                                 Vertex(6 * (y % u) + 2 * (y / u) + 1)};
  };
  for (const DiffTriple& t : difference_triples(cross, 3 * u))
    for (int s = 0; s < 3 * u; ++s) {
      auto a = pair_labels(s);
      auto b = pair_labels((s + t.a) % (3 * u));
      auto c = pair_labels((s + t.a + t.b) % (3 * u));
      blocks.push_back({UKind::K3, {a[0], b[0], c[0]}});
      blocks.push_back({UKind::K3, {a[0], b[1], c[1]}});
      blocks.push_back({UKind::K3, {a[1], b[0], c[1]}});
      blocks.push_back({UKind::K3, {a[1], b[1], c[0]}});
    }
  return blocks;
}

// Signs for one block of seven difference classes: the signed sum must
// vanish mod v and the partial sums must be distinct vertices.
bool sign_block(const std::array<int, 7>& d, int v, std::array<Vertex, 7>& cycle) {
  for (int mask = 0; mask < 128; ++mask) {
    long sum = 0;
    bool ok = true;
    std::array<Vertex, 7> c{};
    for (int i = 0; i < 7 && ok; ++i) {
      sum += (mask >> i & 1) ? -d[size_t(i)] : d[size_t(i)];
      Vertex x = Vertex(((sum % v) + v) % v);
      if (i < 6) {
        c[size_t(i + 1)] = x;
        for (int q = 0; q <= i; ++q)
          if (c[size_t(q)] == x) ok = false;
      } else if (x != 0) {
        ok = false;
      }
    }
    if (ok) {
      cycle = c;
      return true;
    }
  }
  return false;
}

std::vector<UBlock> c7_cyclic(int v) {
  int nb = (v - 1) / 14;
  std::vector<std::array<int, 7>> groups;
  groups.resize(size_t(nb));
  for (int k = 0; k < nb; ++k)
    for (int i = 0; i < 7; ++i) groups[size_t(k)][size_t(i)] = 7 * k + i + 1;
  std::vector<std::array<Vertex, 7>> bases;
  bases.resize(size_t(nb));
  std::vector<int> failed;
  for (int k = 0; k < nb; ++k)
    if (!sign_block(groups[size_t(k)], v, bases[size_t(k)])) failed.push_back(k);
  // Unsignable blocks trade one class with an already signed block.
  for (int k : failed) {
    if (sign_block(groups[size_t(k)], v, bases[size_t(k)])) continue;
    bool fixed = false;
    for (int k2 = 0; k2 < nb && !fixed; ++k2) {
      if (k2 == k) continue;
      for (int i = 0; i < 7 && !fixed; ++i)
        for (int j = 0; j < 7 && !fixed; ++j) {
          std::swap(groups[size_t(k)][size_t(i)], groups[size_t(k2)][size_t(j)]);
          if (sign_block(groups[size_t(k)], v, bases[size_t(k)]) &&
              sign_block(groups[size_t(k2)], v, bases[size_t(k2)])) {
            fixed = true;
          } else {
            std::swap(groups[size_t(k)][size_t(i)], groups[size_t(k2)][size_t(j)]);
          }
        }
    }
    if (!fixed) throw Exhausted("no signed difference blocks for " + std::to_string(v), false);
  }
  std::vector<UBlock> out;
  for (const auto& base : bases)
    for (int t = 0; t < v; ++t) {
      UBlock b{UKind::C7, std::vector<Vertex>(7)};
      for (int i = 0; i < 7; ++i) b.labels[size_t(i)] = Vertex((base[size_t(i)] + t) % v);
      out.push_back(std::move(b));
    }
  return out;
}

// Fixture cycles over Z_{7n} in residue layout, relabeled so part i becomes
// the range group at the quotient point group[i].
std::vector<UBlock> piece_cycles(int nparts, const std::array<Vertex, 7>* groups_begin) {
  std::vector<UBlock> fixture =
      Registry::instance().base_cycles(HostSpec::k_multi(nparts, Layout::Residues));
  for (UBlock& b : fixture)
    for (Vertex& x : b.labels) x = groups_begin[x % nparts][size_t(x / nparts)];
  return fixture;
}

}  // namespace

std::vector<DiffTriple> difference_triples(std::vector<int> diffs, int m, long node_budget) {
  if (diffs.size() % 3 != 0) throw NotAdmissible("difference set size is not a multiple of 3");
  for (int d : diffs)
    if (d <= 0 || 2 * d >= m) throw NotAdmissible("difference out of range: " + std::to_string(d));
  std::sort(diffs.begin(), diffs.end());
  if (std::adjacent_find(diffs.begin(), diffs.end()) != diffs.end())
    throw NotAdmissible("repeated difference");
  TripleSearch s;
  s.m = m;
  s.node_limit = node_budget;
  s.pool = std::move(diffs);
  s.used.assign(s.pool.size(), false);
  if (!s.run()) throw Exhausted("no triple partition of the difference set", false);
  return s.acc;
}

std::vector<OneFactor> one_factor_split(int d, int m) {
  if (m <= 0 || m % 2 != 0 || d <= 0 || 2 * d > m)
    throw NotAdmissible("difference " + std::to_string(d) + " is not a class of Z_" + std::to_string(m));
  if (2 * d == m) {
    OneFactor f;
    for (Vertex i = 0; i < d; ++i) f.pairs.push_back(make_edge(i, i + d));
    return {std::move(f)};
  }
  int g = std::gcd(d, m);
  int len = m / g;
  if (len % 2 != 0)
    throw NotSplittable("difference " + std::to_string(d) + " closes odd cycles mod " + std::to_string(m));
  OneFactor even, odd;
  for (int s = 0; s < g; ++s)
    for (int j = 0; j < len; ++j) {
      Edge e = make_edge(Vertex((s + j * d) % m), Vertex((s + (j + 1) * d) % m));
      (j % 2 == 0 ? even : odd).pairs.push_back(e);
    }
  return {std::move(even), std::move(odd)};
}

std::vector<UBlock> sts(int n) {
  if (n < 3 || (n % 6 != 1 && n % 6 != 3))
    throw NotAdmissible(std::to_string(n) + " is not an admissible triple system order (1 or 3 mod 6, n >= 3)");
  std::vector<UBlock> blocks;
  if (n % 6 == 3) {
    // Idempotent quasigroup i*k = (i+k)(t+1) over Z_{2t+1}, three levels.
    int q = n / 3;
    int half = (q + 1) / 2;
    auto pt = [&](int i, int j) { return Vertex(3 * i + j); };
    for (int i = 0; i < q; ++i) blocks.push_back({UKind::K3, {pt(i, 0), pt(i, 1), pt(i, 2)}});
    for (int i = 0; i < q; ++i)
      for (int k = i + 1; k < q; ++k)
        for (int j = 0; j < 3; ++j)
          blocks.push_back({UKind::K3, {pt(i, j), pt(k, j), pt((i + k) * half % q, (j + 1) % 3)}});
  } else {
    // Half-idempotent quasigroup i*k = s(i+k) over Z_{2t}, s(2r) = r and
    // s(2r+1) = t+r, three levels and one extra point.
    int t = n / 6;
    int q = 2 * t;
    Vertex inf = Vertex(n - 1);
    auto s = [&](int x) { return x % 2 == 0 ? x / 2 : t + x / 2; };
    auto pt = [&](int i, int j) { return Vertex(3 * i + j); };
    for (int i = 0; i < t; ++i) blocks.push_back({UKind::K3, {pt(i, 0), pt(i, 1), pt(i, 2)}});
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < 3; ++j)
        blocks.push_back({UKind::K3, {inf, pt(t + i, j), pt(i, (j + 1) % 3)}});
    for (int i = 0; i < q; ++i)
      for (int k = i + 1; k < q; ++k)
        for (int j = 0; j < 3; ++j)
          blocks.push_back({UKind::K3, {pt(i, j), pt(k, j), pt(s((i + k) % q), (j + 1) % 3)}});
  }
  return checked(std::move(blocks), HostSpec::complete(n));
}

std::vector<UBlock> pbd35(int n) {
  if (n < 3 || n % 2 == 0) throw NotAdmissible(std::to_string(n) + " is not an odd order >= 3");
  if (n % 6 == 1 || n % 6 == 3) return sts(n);
  if (n == 5) return {{UKind::K5, {0, 1, 2, 3, 4}}};
  if ((n - 5) % 24 == 6 && n >= 35) return checked(pbd_groups(n), HostSpec::complete(n));
  return checked(pbd_hole(n), HostSpec::complete(n));
}

std::pair<std::vector<UBlock>, OneFactor> k3k5_even(int n) {
  if (n < 6 || n % 2 != 0) throw NotAdmissible(std::to_string(n) + " is not an even order >= 6");
  std::vector<UBlock> blocks = pbd35(n + 1);
  // The deleted point must avoid the 5-clique; swap it out if needed.
  for (const UBlock& b : blocks)
    if (b.kind == UKind::K5 && std::find(b.labels.begin(), b.labels.end(), Vertex(n)) != b.labels.end()) {
      Vertex other = 0;
      while (std::find(b.labels.begin(), b.labels.end(), other) != b.labels.end()) ++other;
      for (UBlock& c : blocks)
        for (Vertex& x : c.labels) {
          if (x == Vertex(n)) x = other;
          else if (x == other) x = Vertex(n);
        }
      break;
    }
  std::vector<UBlock> kept;
  OneFactor factor;
  for (UBlock& b : blocks) {
    auto it = std::find(b.labels.begin(), b.labels.end(), Vertex(n));
    if (it == b.labels.end()) {
      kept.push_back(std::move(b));
      continue;
    }
    b.labels.erase(it);
    factor.pairs.push_back(make_edge(b.labels[0], b.labels[1]));
  }
  std::sort(factor.pairs.begin(), factor.pairs.end());
  return {checked(std::move(kept), HostSpec::k_minus_factor(n, factor)), std::move(factor)};
}

std::vector<UBlock> walecki7(const std::array<Vertex, 7>& labels) {
  static constexpr std::array<std::array<int, 7>, 3> kBase = {{
      {6, 0, 1, 5, 2, 4, 3},
      {6, 1, 2, 0, 3, 5, 4},
      {6, 2, 3, 1, 4, 0, 5},
  }};
  std::vector<UBlock> out;
  for (const auto& base : kBase) {
    UBlock b{UKind::C7, std::vector<Vertex>(7)};
    for (int i = 0; i < 7; ++i) b.labels[size_t(i)] = labels[size_t(base[size_t(i)])];
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<UBlock> c7_complete(int v) {
  if (v < 7 || (v % 14 != 1 && v % 14 != 7))
    throw NotAdmissible(std::to_string(v) + " is not an admissible cycle system order (1 or 7 mod 14, v >= 7)");
  if (v % 14 == 1) return checked(c7_cyclic(v), HostSpec::complete(v));
  int n = v / 7;
  std::vector<UBlock> blocks;
  for (int j = 0; j < n; ++j) {
    std::array<Vertex, 7> group{};
    for (int i = 0; i < 7; ++i) group[size_t(i)] = Vertex(7 * j + i);
    for (UBlock& b : walecki7(group)) blocks.push_back(std::move(b));
  }
  if (n >= 3)
    for (UBlock& b : c7_multipartite(n)) blocks.push_back(std::move(b));
  return checked(std::move(blocks), HostSpec::complete(v));
}

std::vector<UBlock> c7_multipartite(int n) {
  if (n < 3 || n % 2 == 0) throw NotAdmissible(std::to_string(n) + " is not an odd part count >= 3");
  HostSpec host = HostSpec::k_multi(n, Layout::Ranges);
  if (n == 3 || n == 5) {
    std::vector<UBlock> cycles =
        Registry::instance().base_cycles(HostSpec::k_multi(n, Layout::Residues));
    for (UBlock& b : cycles)
      for (Vertex& x : b.labels) x = Vertex(7 * (x % n) + x / n);
    return checked(std::move(cycles), host);
  }
  std::vector<UBlock> cycles;
  for (const InflatedPiece& piece : inflate(pbd35(n)))
    for (UBlock& b : piece_cycles(int(piece.groups.size()), piece.groups.data()))
      cycles.push_back(std::move(b));
  return checked(std::move(cycles), host);
}

}  // namespace heptad
