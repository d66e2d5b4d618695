#include "heptad/assembly.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "heptad/catalog.hpp"
#include "heptad/errors.hpp"
#include "heptad/fixtures.hpp"
#include "heptad/ingredients.hpp"
#include "heptad/verify.hpp"

namespace heptad {
namespace {

const std::string& param(const PlanNode& n, const std::string& key) {
  for (const auto& [k, v] : n.params)
    if (k == key) return v;
  throw Error("plan node " + n.step + " lacks parameter " + key);
}

int param_int(const PlanNode& n, const std::string& key) {
  return std::stoi(param(n, key));
}

int param_class(const PlanNode& n) {
  return record_class_from_name(param(n, "class"));
}

std::vector<int> param_groups(const PlanNode& n) {
  const std::string& s = param(n, "groups");
  std::vector<int> out;
  for (size_t pos = 0; pos < s.size();) {
    size_t next = std::min(s.find(',', pos), s.size());
    out.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

PlanNode fixture_node(const HostSpec& host, int cls) {
  return {"fixture",
          {{"host", host.key()}, {"class", record_class_name(cls)}},
          {}};
}

// Covers the complete multipartite arcs over the listed point groups with a
// relabeled base design (D8) or a doubled cycle system (self-reverse classes).
PlanNode fill_node(UKind kind, const std::vector<Vertex>& groups, int cls) {
  std::string list;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i) list += ',';
    list += std::to_string(groups[i]);
  }
  int nparts = int(groups.size());
  PlanNode child =
      cls == 8
          ? fixture_node(HostSpec::kstar_multi(nparts, Layout::Residues), 8)
          : PlanNode{
                "double",
                {{"class", record_class_name(cls)}},
                {fixture_node(HostSpec::k_multi(nparts, Layout::Residues),
                              kCycleClass)}};
  return {"fill_piece",
          {{"kind", ukind_name(kind)},
           {"groups", list},
           {"class", record_class_name(cls)}},
          {std::move(child)}};
}

// Cross-group arcs of 2x groups minus the x paired bipartite layers. The
// quotient is a triangle and clique cover of K_2x minus a one-factor,
// relabeled so the missing factor joins groups 2j and 2j+1.
PlanNode even_skeleton_node(int x, int cls) {
  auto [qblocks, factor] = k3k5_even(2 * x);
  std::vector<Vertex> perm(size_t(2 * x));
  for (int j = 0; j < x; ++j) {
    perm[size_t(factor.pairs[size_t(j)].first)] = Vertex(2 * j);
    perm[size_t(factor.pairs[size_t(j)].second)] = Vertex(2 * j + 1);
  }
  PlanNode node{"even_skeleton",
                {{"x", std::to_string(x)}, {"class", record_class_name(cls)}},
                {}};
  node.children.push_back({"k3k5_even", {{"n", std::to_string(2 * x)}}, {}});
  for (const UBlock& b : qblocks) {
    std::vector<Vertex> groups;
    for (Vertex p : b.labels) groups.push_back(perm[size_t(p)]);
    std::sort(groups.begin(), groups.end());
    node.children.push_back(fill_node(b.kind, groups, cls));
  }
  return node;
}

// Cross-group arcs of n odd groups; the quotient for n >= 7 is a pairwise
// balanced design on n points, for n = 3 and 5 a single block.
PlanNode odd_skeleton_node(int n, int cls) {
  PlanNode node{"odd_skeleton",
                {{"n", std::to_string(n)}, {"class", record_class_name(cls)}},
                {}};
  if (n == 3 || n == 5) {
    std::vector<Vertex> groups;
    groups.resize(size_t(n));
    std::iota(groups.begin(), groups.end(), 0);
    node.children.push_back(
        fill_node(n == 3 ? UKind::K3 : UKind::K5, groups, cls));
    return node;
  }
  node.children.push_back({"pbd35", {{"n", std::to_string(n)}}, {}});
  for (const UBlock& b : pbd35(n))
    node.children.push_back(fill_node(b.kind, b.labels, cls));
  return node;
}

void check_admissible(int v, int cls) {
  if (cls < 1 || cls > kNumClasses)
    throw NotAdmissible("class must be one of D1..D10");
  if (v >= 2 && v % 7 > 1)
    throw NotAdmissible(std::to_string(v) + "·" + std::to_string(v - 1) +
                        " = " + std::to_string(1LL * v * (v - 1)) +
                        " not ≡ 0 mod 7");
  if (v < 7)
    throw NotAdmissible("v = " + std::to_string(v) + " < 7");
}

PlanNode plan_impl(int v, int cls) {
  if (cls == 9) return {"reverse", {{"class", "D9"}}, {plan_impl(v, 8)}};
  int r = v % 14;
  if (r == 0) {
    int x = v / 14;
    if (x <= 2) return fixture_node(HostSpec::kstar(v), cls);
    PlanNode node{"pairs_plus_skeleton",
                  {{"v", std::to_string(v)},
                   {"x", std::to_string(x)},
                   {"class", record_class_name(cls)}},
                  {}};
    if (cls == 10) node.params.push_back({"route", "extension"});
    for (int j = 0; j < x; ++j)
      node.children.push_back(fixture_node(HostSpec::kstar(14), cls));
    node.children.push_back(even_skeleton_node(x, cls));
    return node;
  }
  if (r == 1) {
    if (cls != 8)
      return {"double",
              {{"class", record_class_name(cls)}},
              {{"c7_complete", {{"v", std::to_string(v)}}, {}}}};
    if (v == 15 || v == 29) return fixture_node(HostSpec::kstar(v), 8);
    int x = (v - 1) / 14;
    PlanNode node{"hub_pairs_plus_skeleton",
                  {{"v", std::to_string(v)},
                   {"x", std::to_string(x)},
                   {"class", "D8"}},
                  {}};
    for (int j = 0; j < x; ++j)
      node.children.push_back(fixture_node(HostSpec::kstar(15), 8));
    node.children.push_back(even_skeleton_node(x, 8));
    return node;
  }
  if (r == 7) {
    if (cls != 8)
      return {"double",
              {{"class", record_class_name(cls)}},
              {{"c7_complete", {{"v", std::to_string(v)}}, {}}}};
    if (v == 7) return fixture_node(HostSpec::kstar(7), 8);
    int n = v / 7;
    PlanNode node{"groups_plus_skeleton",
                  {{"v", std::to_string(v)},
                   {"n", std::to_string(n)},
                   {"class", "D8"}},
                  {}};
    for (int j = 0; j < n; ++j)
      node.children.push_back(fixture_node(HostSpec::kstar(7), 8));
    node.children.push_back(odd_skeleton_node(n, 8));
    return node;
  }
  if (v == 8) return fixture_node(HostSpec::kstar(8), cls);
  int n = (v - 1) / 7;
  PlanNode node{"hub_groups_plus_skeleton",
                {{"v", std::to_string(v)},
                 {"n", std::to_string(n)},
                 {"class", record_class_name(cls)}},
                {}};
  if (cls == 10) node.params.push_back({"route", "extension"});
  for (int j = 0; j < n; ++j)
    node.children.push_back(fixture_node(HostSpec::kstar(8), cls));
  node.children.push_back(odd_skeleton_node(n, cls));
  return node;
}

Block reverse_block(const Block& b) {
  std::array<Arc, 7> rev{};
  std::array<Arc, 7> arcs = arcs_of_block(b);
  for (size_t i = 0; i < 7; ++i) rev[i] = {arcs[i].head, arcs[i].tail};
  std::optional<Block> out = classify_arcs(rev);
  if (!out) throw Error("reversed arcs do not form a heptagon");
  return *out;
}

const FixtureRecord& fixture_record(const std::string& host_key, int cls) {
  for (const FixtureRecord& r : Registry::instance().records())
    if (r.cls == cls && r.host.key() == host_key) return r;
  throw NoFixture("no fixture for " + host_key + " " + record_class_name(cls));
}

std::vector<UBlock> exec_cycles(const PlanNode& n) {
  if (n.step == "fixture")
    return develop_cycles(
        fixture_record(param(n, "host"), param_class(n)).starters);
  if (n.step == "c7_complete") return c7_complete(param_int(n, "v"));
  throw Error("plan step " + n.step + " does not yield cycles");
}

std::vector<Block> exec_blocks(const PlanNode& n);

// Fixture labels run over Z_7k by residue; group g holds labels 7g..7g+6.
std::vector<Block> fill_blocks(const PlanNode& n) {
  std::vector<int> groups = param_groups(n);
  int k = int(groups.size());
  std::vector<Block> out = exec_blocks(n.children.at(0));
  for (Block& b : out)
    for (Vertex& y : b.labels) y = Vertex(7 * groups[size_t(y % k)] + y / k);
  return out;
}

void append(std::vector<Block>& out, std::vector<Block>&& more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

std::vector<Block> exec_blocks(const PlanNode& n) {
  if (n.step == "fixture")
    return develop(fixture_record(param(n, "host"), param_class(n)).starters);
  if (n.step == "reverse") {
    std::vector<Block> out = exec_blocks(n.children.at(0));
    for (Block& b : out) b = reverse_block(b);
    return out;
  }
  if (n.step == "double") {
    int cls = param_class(n);
    std::vector<Block> out;
    for (const UBlock& c : exec_cycles(n.children.at(0))) {
      auto [a, b] = double_cycle(c, cls);
      out.push_back(a);
      out.push_back(b);
    }
    return out;
  }
  if (n.step == "fill_piece") return fill_blocks(n);
  if (n.step == "even_skeleton" || n.step == "odd_skeleton") {
    std::vector<Block> out;
    for (const PlanNode& c : n.children)
      if (c.step == "fill_piece") append(out, exec_blocks(c));
    return out;
  }
  if (n.step == "pairs_plus_skeleton" || n.step == "hub_pairs_plus_skeleton") {
    int v = param_int(n, "v");
    std::vector<Block> out;
    int j = 0;
    for (const PlanNode& c : n.children) {
      if (c.step != "fixture") {
        append(out, exec_blocks(c));
        continue;
      }
      // Labels 0..6 land in group 2j, 7..13 in group 2j+1, 14 on the hub.
      std::vector<Block> fb = exec_blocks(c);
      for (Block& b : fb)
        for (Vertex& y : b.labels)
          y = y == 14 ? Vertex(v - 1) : Vertex(7 * (2 * j + (y >= 7)) + y % 7);
      append(out, std::move(fb));
      ++j;
    }
    return out;
  }
  if (n.step == "groups_plus_skeleton" ||
      n.step == "hub_groups_plus_skeleton") {
    int v = param_int(n, "v");
    std::vector<Block> out;
    int j = 0;
    for (const PlanNode& c : n.children) {
      if (c.step != "fixture") {
        append(out, exec_blocks(c));
        continue;
      }
      // Labels 0..6 land in group j, 7 on the hub.
      std::vector<Block> fb = exec_blocks(c);
      for (Block& b : fb)
        for (Vertex& y : b.labels)
          y = y == 7 ? Vertex(v - 1) : Vertex(7 * j + y);
      append(out, std::move(fb));
      ++j;
    }
    return out;
  }
  throw Error("unknown plan step " + n.step);
}

}  // namespace

std::pair<Block, Block> double_cycle(const UBlock& cycle, int cls) {
  if (cycle.kind != UKind::C7 || cycle.labels.size() != 7)
    throw UnsupportedBlock("doubling needs a seven cycle");
  if (!class_valid(cls)) throw NotAdmissible("class must be one of D1..D10");
  if (reverse_class(cls) != cls)
    throw NotSelfReverse(record_class_name(cls) +
                         " splits a doubled cycle across two classes");
  Block a;
  a.cls = cls;
  std::copy(cycle.labels.begin(), cycle.labels.end(), a.labels.begin());
  return {a, reverse_block(a)};
}

Decomposition reverse_decomposition(const Decomposition& d) {
  if (!d.host.directed())
    throw InvalidHost("reversal needs a directed host");
  int rcls = reverse_class(d.cls);
  Decomposition out;
  out.host = d.host;
  out.cls = rcls;
  out.blocks.reserve(d.blocks.size());
  for (const Block& b : d.blocks) out.blocks.push_back(reverse_block(b));
  out.trace =
      PlanNode{"reverse", {{"class", record_class_name(rcls)}}, {d.trace}};
  return out;
}

PlanNode plan(int v, int cls) {
  check_admissible(v, cls);
  return plan_impl(v, cls);
}

Decomposition generate(int v, int cls) {
  check_admissible(v, cls);
  Decomposition d;
  d.host = HostSpec::kstar(v);
  d.cls = cls;
  d.trace = plan_impl(v, cls);
  d.blocks = exec_blocks(d.trace);
  if (!verify(d).ok)
    throw VerificationFailure("assembled design failed verification:\n" +
                              diagnose(d));
  return d;
}

}  // namespace heptad
