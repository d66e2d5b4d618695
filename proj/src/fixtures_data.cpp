#include "heptad/fixtures.hpp"

namespace heptad {
namespace {

constexpr int F = kInf;

FixtureRecord make_record(HostSpec host, int cls, int modulus, bool has_inf,
                          std::initializer_list<std::array<int, 7>> starters,
                          int orbit, std::string provenance) {
  FixtureRecord r;
  r.host = std::move(host);
  r.cls = cls;
  r.starters.modulus = modulus;
  r.starters.has_infinity = has_inf;
  for (const auto& labels : starters) {
    Starter s;
    s.block.cls = cls;
    for (int j = 0; j < 7; ++j) s.block.labels[size_t(j)] = labels[size_t(j)];
    s.orbit = orbit;
    r.starters.starters.push_back(s);
  }
  r.provenance = std::move(provenance);
  return r;
}

std::vector<FixtureRecord> published_fixtures() {
  std::vector<FixtureRecord> out;
  const HostSpec k7 = HostSpec::kstar(7);
  const HostSpec k8 = HostSpec::kstar(8);
  const HostSpec k14 = HostSpec::kstar(14);
  const HostSpec k15 = HostSpec::kstar(15);
  const HostSpec k28 = HostSpec::kstar(28);
  const HostSpec k29 = HostSpec::kstar(29);
  const HostSpec m3 = HostSpec::kstar_multi(3, Layout::Residues);
  const HostSpec m5 = HostSpec::kstar_multi(5, Layout::Residues);

  out.push_back(make_record(k7, 8, 6, true, {{0, 1, 3, 4, 2, 5, F}}, 6,
                            "paper-example-2.1"));

  const std::array<std::array<int, 7>, 8> k8_starters = {{
      {0, 2, 3, 7, 4, 6, 5},
      {0, 5, 6, 3, 1, 2, 4},
      {0, 2, 3, 7, 4, 6, 1},
      {0, 1, 3, 7, 4, 5, 2},
      {0, 1, 3, 2, 5, 7, 4},
      {0, 1, 3, 4, 7, 2, 6},
      {0, 1, 2, 4, 7, 3, 6},
      {0, 1, 3, 7, 2, 4, 5},
  }};
  for (int cls = 1; cls <= 8; ++cls)
    out.push_back(make_record(k8, cls, 8, false, {k8_starters[size_t(cls - 1)]},
                              8, "paper-example-2.2"));

  const std::array<std::array<std::array<int, 7>, 2>, 8> k14_starters = {{
      {{{0, 1, 12, 2, 11, 3, 9}, {0, 3, 4, 12, 1, 8, F}}},
      {{{0, 1, 12, 2, 11, 3, 9}, {0, 2, 5, 6, 1, 8, F}}},
      {{{0, 1, 12, 2, 11, 3, 9}, {0, 5, 6, 4, 7, 1, F}}},
      {{{0, 1, 12, 2, 11, 3, 5}, {0, 3, 4, 10, 1, 8, F}}},
      {{{0, 1, 12, 2, 11, 3, 9}, {0, 2, 1, 6, 9, 3, F}}},
      {{{0, 1, 12, 2, 11, 3, 9}, {0, 2, 5, 6, 11, 4, F}}},
      // second starter repaired: the published variant fixes infinity at a
      // position with out-degree 2, which cannot balance under development
      {{{0, 1, 12, 2, 11, 3, 9}, {0, 5, 7, 1, F, 11, 10}}},
      {{{0, 1, 12, 2, 11, 3, 4}, {0, 2, 5, 11, 3, 10, F}}},
  }};
  for (int cls = 1; cls <= 8; ++cls)
    out.push_back(make_record(k14, cls, 13, true,
                              {k14_starters[size_t(cls - 1)][0],
                               k14_starters[size_t(cls - 1)][1]},
                              13, "paper-example-2.3"));

  out.push_back(make_record(k15, 8, 15, false,
                            {{0, 1, 3, 5, 2, 14, 4}, {0, 14, 10, 1, 6, 13, 7}},
                            15, "paper-example-2.4"));

  const std::array<std::array<std::array<int, 7>, 4>, 8> k28_starters = {{
      {{{0, 1, 26, 2, 25, 3, 23},
        {0, 3, 25, 4, 23, 5, 26},
        {0, 9, 16, 6, 14, 3, 13},
        {0, 12, 14, 26, 10, 23, F}}},
      // third starter repaired (16 -> 15): the published variant doubles
      // difference 16 and misses 18
      {{{0, 1, 26, 2, 25, 3, 23},
        {0, 3, 19, 4, 23, 5, 26},
        {0, 5, 15, 6, 14, 3, 13},
        {0, 2, 14, 20, 6, 13, F}}},
      {{{0, 1, 26, 2, 25, 3, 23},
        {0, 16, 19, 4, 23, 5, 26},
        {0, 5, 12, 6, 14, 3, 13},
        {0, 9, 11, 21, 6, 19, F}}},
      // last labels of starters three and four repaired (10 -> 11, 15 -> 16):
      // the published variant doubles difference 20 and misses 21
      {{{0, 1, 26, 2, 24, 3, 25},
        {0, 3, 23, 4, 22, 5, 20},
        {0, 9, 5, 16, 4, 17, 11},
        {0, 8, 9, 13, 26, 16, F}}},
      // fourth starter repaired (leading 0 -> 2): the published variant
      // doubles difference 16 and misses 18
      {{{0, 1, 26, 2, 25, 3, 23},
        {0, 2, 14, 4, 23, 5, 26},
        {0, 5, 16, 26, 7, 10, 21},
        {2, 11, 4, 17, 3, 15, F}}},
      {{{0, 1, 26, 2, 25, 3, 23},
        {0, 2, 5, 26, 18, 1, 11},
        {0, 9, 21, 26, 5, 18, 19},
        {0, 14, 2, 13, 22, 15, F}}},
      {{{0, 1, 26, 2, 25, 3, 24},
        {0, 5, 26, 6, 25, 16, 15},
        {0, 10, 26, 11, 18, 1, 14},
        {0, 16, 18, 9, F, 23, 19}}},
      {{{0, 1, 26, 2, 25, 3, 21},
        {0, 2, 5, 26, 3, 25, 18},
        {0, 8, 18, 7, 19, 2, 16},
        {0, 15, 2, 3, 23, 4, F}}},
  }};
  for (int cls = 1; cls <= 8; ++cls)
    out.push_back(make_record(k28, cls, 27, true,
                              {k28_starters[size_t(cls - 1)][0],
                               k28_starters[size_t(cls - 1)][1],
                               k28_starters[size_t(cls - 1)][2],
                               k28_starters[size_t(cls - 1)][3]},
                              27, "paper-example-2.5"));

  out.push_back(make_record(k29, 8, 29, false,
                            {{0, 3, 21, 4, 20, 5, 28},
                             {0, 27, 5, 26, 16, 25, 21},
                             {0, 26, 9, 27, 8, 28, 23},
                             {0, 22, 23, 21, 5, 20, 24}},
                            29, "paper-example-2.6"));

  out.push_back(make_record(m3, 8, 21, false,
                            {{0, 1, 5, 12, 4, 17, 10}, {0, 2, 7, 12, 8, 18, 20}},
                            21, "paper-example-2.8"));

  out.push_back(make_record(m5, 8, 35, false,
                            {{0, 1, 3, 19, 2, 16, 17},
                             {0, 3, 7, 18, 6, 8, 16},
                             {0, 6, 13, 19, 12, 1, 14},
                             {0, 8, 17, 20, 16, 4, 13}},
                            35, "paper-example-2.9"));
  return out;
}

#include "fixtures_derived.inc"

}  // namespace

std::vector<FixtureRecord> builtin_fixtures() {
  std::vector<FixtureRecord> out = published_fixtures();
  for (FixtureRecord& r : derived_fixtures()) out.push_back(std::move(r));
  return out;
}

std::vector<std::pair<HostSpec, int>> derived_fixture_specs() {
  return {
      {HostSpec::kstar(7), 10},
      {HostSpec::kstar(8), 10},
      {HostSpec::kstar(14), 10},
      {HostSpec::kstar(28), 10},
      {HostSpec::k_multi(3, Layout::Residues), kCycleClass},
      {HostSpec::k_multi(5, Layout::Residues), kCycleClass},
  };
}

}  // namespace heptad
