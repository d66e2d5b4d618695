// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "heptad/assembly.hpp"
#include "heptad/catalog.hpp"
#include "heptad/certio.hpp"
#include "heptad/errors.hpp"
#include "heptad/fixtures.hpp"
#include "heptad/ingredients.hpp"
#include "heptad/search.hpp"
#include "heptad/verify.hpp"

using namespace heptad;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what) {
  std::printf("%s  %d %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Every admissible v in [7, 210], every class: generate verifies with
// v(v-1)/7 blocks, inside the time budget.
void criterion_spectrum_sweep() {
  auto t0 = std::chrono::steady_clock::now();
  int designs = 0;
  size_t largest = 0;
  std::string bad;
  for (int v = 7; v <= 210 && bad.empty(); ++v) {
    if (v % 7 > 1) continue;
    for (int cls = 1; cls <= 10; ++cls) {
      Decomposition d;
      try {
        d = generate(v, cls);
      } catch (const Error& e) {
        bad = "generate(" + std::to_string(v) + ", D" + std::to_string(cls) +
              ") threw: " + e.what();
        break;
      }
      if (d.blocks.size() != size_t(v) * size_t(v - 1) / 7 || !verify(d).ok) {
        bad = "generate(" + std::to_string(v) + ", D" + std::to_string(cls) +
              ") produced a bad design";
        break;
      }
      largest = std::max(largest, d.blocks.size());
      ++designs;
    }
  }
  double dt = seconds_since(t0);
  bool ok = bad.empty() && dt < 60.0;
  report(1, ok,
         ok ? "spectrum sweep: " + std::to_string(designs) +
                  " designs verified, largest " + std::to_string(largest) +
                  " blocks, " + std::to_string(dt).substr(0, 4) + "s"
            : (bad.empty() ? "spectrum sweep exceeded 60s" : bad));
}

// Every other v in [2, 210] is refused with the divisibility reason, and
// acceptance/refusal exactly matches the residue test.
void criterion_necessity() {
  int refused = 0;
  std::string bad;
  for (int v = 2; v <= 210 && bad.empty(); ++v) {
    bool admissible = v >= 7 && v % 7 <= 1;
    try {
      Decomposition d = generate(v, 1);
      if (!admissible)
        bad = "generate(" + std::to_string(v) + ") accepted inadmissible v";
      (void)d;
    } catch (const NotAdmissible& e) {
      if (admissible) {
        bad = "generate(" + std::to_string(v) + ") refused admissible v";
      } else {
        ++refused;
        std::string msg = e.what();
        if (msg.find("mod 7") == std::string::npos)
          bad = "refusal for v = " + std::to_string(v) +
                " does not cite divisibility: " + msg;
      }
    }
  }
  report(2, bad.empty(),
         bad.empty()
             ? "necessity: " + std::to_string(refused) +
                   " inadmissible orders refused citing the mod 7 condition"
             : bad);
}

// The published starter sets develop to verified designs with the block
// counts fixed by their hosts' orbit arithmetic.
void criterion_published_fixtures() {
  const std::map<std::string, size_t> expected = {
      {"Kstar(7)", 6},           {"Kstar(8)", 8},
      {"Kstar(14)", 26},         {"Kstar(15)", 30},
      {"Kstar(28)", 108},        {"Kstar(29)", 116},
      {"Kstar(3x7,residues)", 42}, {"Kstar(5x7,residues)", 140}};
  int checked = 0;
  std::string bad;
  for (const FixtureRecord& r : Registry::instance().records()) {
    if (r.provenance.rfind("paper-example", 0) != 0) continue;
    std::string where = r.host.key() + " " + record_class_name(r.cls);
    Decomposition d;
    d.host = r.host;
    d.cls = r.cls;
    d.blocks = develop(r.starters);
    auto want = expected.find(r.host.key());
    if (want == expected.end()) {
      bad = "unexpected published host " + where;
      break;
    }
    if (d.blocks.size() != want->second) {
      bad = where + " developed " + std::to_string(d.blocks.size()) +
            " blocks, expected " + std::to_string(want->second);
      break;
    }
    if (!verify(d).ok) {
      bad = where + " failed verification";
      break;
    }
    ++checked;
  }
  report(3, bad.empty() && checked >= 28,
         bad.empty() ? "published fixtures: " + std::to_string(checked) +
                           " starter sets develop to verified designs"
                     : bad);
}

// All 128 orientation words canonicalize into exactly ten classes; D8 and D9
// are each other's reverses and every other class is self-reverse.
void criterion_catalog() {
  std::set<Word> canon;
  bool consistent = true;
  for (Word w = 0; w < 128; ++w) {
    Word c = canonical_word(w);
    canon.insert(c);
    if (class_of_word(w) != class_of_word(c)) consistent = false;
  }
  bool pairs = reverse_class(8) == 9 && reverse_class(9) == 8;
  for (int cls : {1, 2, 3, 4, 5, 6, 7, 10})
    if (reverse_class(cls) != cls) pairs = false;
  bool ok = canon.size() == 10 && consistent && pairs;
  report(4, ok,
         ok ? "catalog: 128 words collapse to 10 classes, reverse pair {D8, D9}"
            : "catalog canonicalization or reverse map is wrong");
}

void criterion_ingredients() {
  std::string bad;
  auto check = [&](bool cond, const std::string& what) {
    if (bad.empty() && !cond) bad = what;
  };
  for (int n = 3; n <= 99 && bad.empty(); n += 2) {
    if (n % 6 != 1 && n % 6 != 3) continue;
    check(verify_undirected(sts(n), HostSpec::complete(n)).ok,
          "sts(" + std::to_string(n) + ")");
  }
  for (int n = 3; n <= 95 && bad.empty(); n += 2) {
    std::vector<UBlock> blocks = pbd35(n);
    size_t fives = 0;
    for (const UBlock& b : blocks) fives += b.kind == UKind::K5;
    check(fives == (n % 6 == 5 ? 1u : 0u),
          "pbd35(" + std::to_string(n) + ") clique count");
    check(verify_undirected(blocks, HostSpec::complete(n)).ok,
          "pbd35(" + std::to_string(n) + ")");
  }
  for (int n = 6; n <= 96 && bad.empty(); n += 2) {
    auto [blocks, factor] = k3k5_even(n);
    std::vector<UBlock> all = blocks;
    for (const Edge& e : factor.pairs)
      all.push_back({UKind::I, {e.first, e.second}});
    check(factor.pairs.size() == size_t(n) / 2,
          "k3k5_even(" + std::to_string(n) + ") factor size");
    check(verify_undirected(all, HostSpec::complete(n)).ok,
          "k3k5_even(" + std::to_string(n) + ")");
  }
  for (int v = 7; v <= 211 && bad.empty(); ++v) {
    if (v % 14 != 1 && v % 14 != 7) continue;
    check(verify_undirected(c7_complete(v), HostSpec::complete(v)).ok,
          "c7_complete(" + std::to_string(v) + ")");
  }
  for (int n = 3; n <= 15 && bad.empty(); n += 2)
    check(verify_undirected(c7_multipartite(n), HostSpec::k_multi(n)).ok,
          "c7_multipartite(" + std::to_string(n) + ")");
  report(5, bad.empty(),
         bad.empty() ? "ingredient suites: sts, pbd35, k3k5_even, c7 systems "
                       "verified across their ranges"
                     : bad + " failed");
}

// 100 seeded single mutations of verified designs, each rejected.
void criterion_fault_injection() {
  std::vector<Decomposition> pool;
  for (auto [v, cls] : std::vector<std::pair<int, int>>{
           {14, 3}, {21, 8}, {21, 9}, {22, 10}, {28, 5}, {35, 1}})
    pool.push_back(generate(v, cls));
  std::mt19937 rng(20260819);
  int rejected = 0;
  std::string bad;
  for (int trial = 0; trial < 100 && bad.empty(); ++trial) {
    Decomposition d = pool[rng() % pool.size()];
    size_t i = rng() % d.blocks.size();
    int kind = int(rng() % 4);
    switch (kind) {
      case 0:
        d.blocks.erase(d.blocks.begin() + long(i));
        break;
      case 1:
        d.blocks.push_back(d.blocks[i]);
        break;
      case 2: {
        size_t p = rng() % 7, q = (p + 1 + rng() % 6) % 7;
        std::swap(d.blocks[i].labels[p], d.blocks[i].labels[q]);
        break;
      }
      default: {
        int other = 1 + int(rng() % 10);
        while (other == d.cls) other = 1 + int(rng() % 10);
        d.cls = other;
        break;
      }
    }
    if (verify(d).ok)
      bad = "mutation " + std::to_string(kind) + " on trial " +
            std::to_string(trial) + " was accepted";
    else
      ++rejected;
  }
  report(6, bad.empty(),
         bad.empty() ? "fault injection: 100 seeded mutations all rejected"
                     : bad);
}

// Two full sweeps emit byte-identical certificates.
void criterion_determinism() {
  auto sweep = [] {
    std::string all;
    for (int v = 7; v <= 210; ++v) {
      if (v % 7 > 1) continue;
      for (int cls = 1; cls <= 10; ++cls)
        all += sha256_hex(cert_to_text(generate(v, cls)));
    }
    return sha256_hex(all);
  };
  std::string first = sweep();
  std::string second = sweep();
  bool ok = first == second;
  report(7, ok,
         ok ? "determinism: repeated sweeps hash to " + first.substr(0, 12)
            : "sweeps disagree: " + first + " vs " + second);
}

// Re-deriving the six search fixtures reproduces the stored checksums.
void criterion_fixture_regen() {
  int matched = 0;
  std::string bad;
  for (const auto& [host, cls] : derived_fixture_specs()) {
    std::string where = host.key() + " " + record_class_name(cls);
    FixtureRecord fresh;
    try {
      fresh = derive_fixture(host, cls);
    } catch (const Error& e) {
      bad = where + " did not re-derive: " + e.what();
      break;
    }
    fresh.sha256 = fixture_checksum(fresh);
    const FixtureRecord* stored = Registry::instance().find(host, cls);
    if (!stored || stored->sha256 != fresh.sha256) {
      bad = where + " checksum changed";
      break;
    }
    ++matched;
  }
  report(8, bad.empty() && matched == 6,
         bad.empty() ? "fixture regeneration: all 6 derived fixtures "
                       "reproduce their checksums"
                     : bad);
}

}  // namespace

int main() {
  criterion_spectrum_sweep();
  criterion_necessity();
  criterion_published_fixtures();
  criterion_catalog();
  criterion_ingredients();
  criterion_fault_injection();
  criterion_determinism();
  criterion_fixture_regen();
  if (failures == 0)
    std::printf("all 8 acceptance criteria pass\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
