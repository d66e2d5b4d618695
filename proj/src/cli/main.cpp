#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heptad/assembly.hpp"
#include "heptad/catalog.hpp"
#include "heptad/certio.hpp"
#include "heptad/errors.hpp"
#include "heptad/fixtures.hpp"
#include "heptad/search.hpp"
#include "heptad/verify.hpp"

namespace {

using namespace heptad;

std::string read_input(const std::string& path) {
  if (path != "-") return read_text_file(path);
  std::ostringstream os;
  os << std::cin.rdbuf();
  return os.str();
}

int class_arg(const std::string& name) { return record_class_from_name(name); }

int run_generate(int v, const std::string& cls_name, const std::string& out,
                 const std::string& format) {
  Decomposition d = generate(v, class_arg(cls_name));
  std::string payload =
      format == "json" ? cert_to_json(d).dump(2) + "\n" : cert_to_text(d);
  if (out.empty()) {
    std::cout << payload;
    std::cerr << d.blocks.size() << " blocks\n";
  } else {
    write_text_file(out, payload);
    std::cout << d.blocks.size() << " blocks\n";
  }
  return 0;
}

int run_verify(const std::string& path) {
  AnyCert cert = cert_from_string(read_input(path));
  if (const auto* d = std::get_if<Decomposition>(&cert)) {
    std::cout << diagnose(*d) << "\n";
    return verify(*d).ok ? 0 : 1;
  }
  const auto& u = std::get<UDecomposition>(cert);
  std::cout << diagnose_undirected(u.blocks, u.host) << "\n";
  return verify_undirected(u.blocks, u.host).ok ? 0 : 1;
}

int run_catalog() {
  for (int cls = 1; cls <= kNumClasses; ++cls) {
    int rev = reverse_class(cls);
    std::printf("%-4s %s %s\n", record_class_name(cls).c_str(),
                word_string(word_of_class(cls)).c_str(),
                rev == cls ? "self-reverse"
                           : ("reverse of " + record_class_name(rev)).c_str());
  }
  std::printf("D8 ↔ D9 (reverse pair)\n");
  return 0;
}

int run_search(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_input(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  FixtureRecord r;
  try {
    r.host = host_from_json(j);
    r.cls = record_class_from_name(j.at("class").get<std::string>());
    OrbitProfile profile;
    profile.modulus = j.at("modulus").get<int>();
    profile.has_infinity = j.value("infinity", false);
    profile.orbits = j.at("orbits").get<std::vector<int>>();
    SearchBudget budget;
    budget.nodes = j.value("budget", budget.nodes);
    r.starters = find_starters(r.host, r.cls, profile, budget);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  r.provenance = "search";
  r.sha256 = fixture_checksum(r);
  std::cout << fixture_to_json(r, true).dump(2) << "\n";
  return 0;
}

size_t record_blocks(const FixtureRecord& r) {
  size_t total = 0;
  for (const Starter& s : r.starters.starters) total += size_t(s.orbit);
  return total;
}

int run_fixtures(bool regen) {
  if (!regen) {
    for (const FixtureRecord& r : Registry::instance().records())
      std::printf("%-26s %-4s %-20s %4zu blocks  sha256 %s\n",
                  r.host.key().c_str(), record_class_name(r.cls).c_str(),
                  r.provenance.c_str(), record_blocks(r), r.sha256.c_str());
    return 0;
  }
  int bad = 0;
  for (const auto& [host, cls] : derived_fixture_specs()) {
    FixtureRecord fresh = derive_fixture(host, cls);
    fresh.sha256 = fixture_checksum(fresh);
    const FixtureRecord* stored = Registry::instance().find(host, cls);
    bool ok = stored && stored->sha256 == fresh.sha256;
    std::printf("%-26s %-4s %s\n", host.key().c_str(),
                record_class_name(cls).c_str(),
                ok ? "ok (checksum reproduced)" : "MISMATCH");
    if (!ok) ++bad;
  }
  return bad == 0 ? 0 : 1;
}

int run_spectrum(int max) {
  bool first = true;
  for (int v = 7; v <= max; ++v) {
    if (v % 7 > 1) continue;
    if (!first) std::cout << " ";
    std::cout << v;
    first = false;
  }
  std::cout << "\n";
  return 0;
}

void print_plan(const PlanNode& n, int depth) {
  std::string line(size_t(2 * depth), ' ');
  line += n.step;
  for (const auto& [k, v] : n.params) line += " " + k + "=" + v;
  std::cout << line << "\n";
  for (const PlanNode& c : n.children) print_plan(c, depth + 1);
}

int run_explain(int v, const std::string& cls_name) {
  print_plan(plan(v, class_arg(cls_name)), 0);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decompositions of complete symmetric digraphs into oriented "
               "heptagons"};
  app.require_subcommand(1);

  const std::vector<std::string> class_names = {
      "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10"};

  int v = 0;
  std::string cls_name, out, path;
  std::string format = "text";
  bool regen = false;
  int max = 210;

  CLI::App* g = app.add_subcommand(
      "generate", "build and verify a decomposition certificate");
  g->add_option("--v", v, "number of points")->required();
  g->add_option("--class", cls_name, "heptagon class")
      ->required()
      ->check(CLI::IsMember(class_names));
  g->add_option("--out", out, "write the certificate here instead of stdout");
  g->add_option("--format", format, "certificate format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* ver = app.add_subcommand(
      "verify", "check a certificate is an exact decomposition");
  ver->add_option("path", path, "certificate file, - for stdin")->required();

  app.add_subcommand("catalog", "list the ten heptagon classes");

  CLI::App* se = app.add_subcommand(
      "search", "run a starter search from a JSON description");
  se->add_option("path", path, "description file, - for stdin")->required();

  CLI::App* fx =
      app.add_subcommand("fixtures", "list or re-derive the stored designs");
  fx->add_flag("--regen", regen,
               "re-derive the search fixtures and compare checksums");

  CLI::App* sp =
      app.add_subcommand("spectrum", "list admissible orders up to a bound");
  sp->add_option("--max", max, "largest order to include");

  CLI::App* ex =
      app.add_subcommand("explain", "print the construction plan tree");
  ex->add_option("--v", v, "number of points")->required();
  ex->add_option("--class", cls_name, "heptagon class")
      ->required()
      ->check(CLI::IsMember(class_names));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (g->parsed()) return run_generate(v, cls_name, out, format);
    if (ver->parsed()) return run_verify(path);
    if (se->parsed()) return run_search(path);
    if (fx->parsed()) return run_fixtures(regen);
    if (sp->parsed()) return run_spectrum(max);
    if (ex->parsed()) return run_explain(v, cls_name);
    return run_catalog();
  } catch (const NotAdmissible& e) {
    std::cerr << "not admissible: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Exhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
