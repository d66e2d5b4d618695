#include "heptad/certio.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "heptad/develop.hpp"
#include "heptad/errors.hpp"
#include "heptad/verify.hpp"

namespace heptad {

using nlohmann::json;
using nlohmann::ordered_json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

void host_to_json(ordered_json& j, const HostSpec& h) {
  switch (h.kind) {
    case HostKind::Kstar:
      j["host"] = "Kstar";
      j["v"] = h.v;
      return;
    case HostKind::K:
      j["host"] = "K";
      j["v"] = h.v;
      return;
    case HostKind::KstarMultipartite:
    case HostKind::KMultipartite:
      j["host"] = h.kind == HostKind::KstarMultipartite ? "KstarMultipartite"
                                                        : "KMultipartite";
      j["parts"] = h.parts;
      j["layout"] = layout_name(h.layout);
      return;
    case HostKind::KstarEvenMinusFactor:
      j["host"] = "KstarEvenMinusFactor";
      j["x"] = h.x;
      return;
    case HostKind::KMinusFactor: {
      j["host"] = "KMinusFactor";
      j["v"] = h.v;
      auto arr = ordered_json::array();
      for (const Edge& e : h.factor.pairs) arr.push_back({e.first, e.second});
      j["factor"] = std::move(arr);
      return;
    }
  }
}

HostSpec host_from_json(const json& j) {
  try {
    std::string name = j.at("host").get<std::string>();
    HostSpec h;
    if (name == "Kstar" || name == "K") {
      h.kind = name == "Kstar" ? HostKind::Kstar : HostKind::K;
      h.v = j.at("v").get<int>();
    } else if (name == "KstarMultipartite" || name == "KMultipartite") {
      h.kind = name == "KstarMultipartite" ? HostKind::KstarMultipartite
                                           : HostKind::KMultipartite;
      h.parts = j.at("parts").get<std::vector<int>>();
      h.layout = layout_from_name(j.value("layout", "ranges"));
    } else if (name == "KstarEvenMinusFactor") {
      h.kind = HostKind::KstarEvenMinusFactor;
      h.x = j.at("x").get<int>();
      h.parts.assign(size_t(std::max(2 * h.x, 0)), 7);
    } else if (name == "KMinusFactor") {
      h.kind = HostKind::KMinusFactor;
      h.v = j.at("v").get<int>();
      for (const auto& e : j.at("factor")) {
        if (!e.is_array() || e.size() != 2)
          throw ParseError("factor entries must be pairs");
        h.factor.pairs.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
      }
    } else {
      throw ParseError("unknown host kind: '" + name + "'");
    }
    validate_host(h);
    return h;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad host object: ") + e.what());
  } catch (const InvalidHost& e) {
    throw ParseError(std::string("bad host object: ") + e.what());
  }
}

namespace {

ordered_json trace_to_json(const PlanNode& n) {
  ordered_json j;
  j["step"] = n.step;
  if (!n.params.empty()) {
    ordered_json p;
    for (const auto& [k, v] : n.params) p[k] = v;
    j["params"] = std::move(p);
  }
  if (!n.children.empty()) {
    auto arr = ordered_json::array();
    for (const PlanNode& c : n.children) arr.push_back(trace_to_json(c));
    j["children"] = std::move(arr);
  }
  return j;
}

std::string host_header(const HostSpec& h) {
  std::ostringstream os;
  os << "host ";
  switch (h.kind) {
    case HostKind::Kstar:
      os << "Kstar v " << h.v;
      break;
    case HostKind::K:
      os << "K v " << h.v;
      break;
    case HostKind::KstarMultipartite:
    case HostKind::KMultipartite:
      os << (h.kind == HostKind::KstarMultipartite ? "KstarMultipartite"
                                                   : "KMultipartite")
         << " parts " << h.parts.size() << "x7 layout " << layout_name(h.layout);
      break;
    case HostKind::KstarEvenMinusFactor:
      os << "KstarEvenMinusFactor x " << h.x;
      break;
    case HostKind::KMinusFactor: {
      os << "KMinusFactor v " << h.v << " factor ";
      for (size_t i = 0; i < h.factor.pairs.size(); ++i) {
        if (i) os << ",";
        os << h.factor.pairs[i].first << "-" << h.factor.pairs[i].second;
      }
      break;
    }
  }
  return os.str();
}

HostSpec host_from_tokens(const std::vector<std::string>& tok, size_t& i) {
  auto need = [&](const char* what) -> std::string {
    if (i >= tok.size()) throw ParseError(std::string("missing ") + what);
    return tok[i++];
  };
  auto need_int = [&](const char* what) {
    std::string s = need(what);
    try {
      return std::stoi(s);
    } catch (...) {
      throw ParseError(std::string("bad integer for ") + what + ": '" + s + "'");
    }
  };
  auto expect = [&](const char* kw) {
    if (need(kw) != kw) throw ParseError(std::string("expected '") + kw + "'");
  };
  if (need("header") != "host") throw ParseError("certificate must start with 'host'");
  std::string name = need("host kind");
  HostSpec h;
  if (name == "Kstar" || name == "K") {
    h.kind = name == "Kstar" ? HostKind::Kstar : HostKind::K;
    expect("v");
    h.v = need_int("v");
  } else if (name == "KstarMultipartite" || name == "KMultipartite") {
    h.kind = name == "KstarMultipartite" ? HostKind::KstarMultipartite
                                         : HostKind::KMultipartite;
    expect("parts");
    std::string p = need("parts");
    size_t xpos = p.find('x');
    if (xpos == std::string::npos || p.substr(xpos + 1) != "7")
      throw ParseError("parts must look like 3x7");
    h.parts.assign(size_t(std::stoi(p.substr(0, xpos))), 7);
    expect("layout");
    h.layout = layout_from_name(need("layout"));
  } else if (name == "KstarEvenMinusFactor") {
    h.kind = HostKind::KstarEvenMinusFactor;
    expect("x");
    h.x = need_int("x");
    h.parts.assign(size_t(std::max(2 * h.x, 0)), 7);
  } else if (name == "KMinusFactor") {
    h.kind = HostKind::KMinusFactor;
    expect("v");
    h.v = need_int("v");
    expect("factor");
    std::string f = need("factor pairs");
    std::istringstream fs(f);
    std::string pair;
    while (std::getline(fs, pair, ',')) {
      size_t dash = pair.find('-');
      if (dash == std::string::npos) throw ParseError("factor pairs look like 0-1");
      h.factor.pairs.push_back(make_edge(std::stoi(pair.substr(0, dash)),
                                         std::stoi(pair.substr(dash + 1))));
    }
  } else {
    throw ParseError("unknown host kind: '" + name + "'");
  }
  try {
    validate_host(h);
  } catch (const InvalidHost& e) {
    throw ParseError(e.what());
  }
  return h;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

AnyCert cert_from_json_value(const json& j) {
  HostSpec host = host_from_json(j);
  try {
    if (j.contains("ublocks")) {
      UDecomposition d;
      d.host = host;
      for (const auto& b : j.at("ublocks")) {
        UBlock u;
        u.kind = ukind_from_name(b.at("kind").get<std::string>());
        u.labels = b.at("labels").get<std::vector<Vertex>>();
        d.blocks.push_back(std::move(u));
      }
      return d;
    }
    Decomposition d;
    d.host = host;
    d.cls = class_from_name(j.at("class").get<std::string>());
    for (const auto& b : j.at("blocks")) {
      if (!b.is_array() || b.size() != 7)
        throw ParseError("blocks must have 7 labels");
      Block blk{d.cls, {}};
      for (int k = 0; k < 7; ++k) blk.labels[size_t(k)] = b[size_t(k)].get<int>();
      d.blocks.push_back(blk);
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate: ") + e.what());
  }
}

AnyCert cert_from_text(const std::string& content) {
  std::istringstream is(content);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    header = split_ws(line);
    if (!header.empty()) break;
  }
  if (header.empty()) throw ParseError("empty certificate");
  size_t i = 0;
  HostSpec host = host_from_tokens(header, i);

  int cls = 0;
  bool directed = false;
  if (i < header.size()) {
    if (header[i] != "class" || i + 1 >= header.size())
      throw ParseError("unexpected trailing header tokens");
    cls = class_from_name(header[i + 1]);
    directed = true;
    i += 2;
  }
  if (i != header.size()) throw ParseError("unexpected trailing header tokens");
  if (directed != host.directed())
    throw ParseError("class token does not match host orientation");

  if (directed) {
    Decomposition d;
    d.host = host;
    d.cls = cls;
    while (std::getline(is, line)) {
      auto tok = split_ws(line);
      if (tok.empty()) continue;
      if (tok.size() != 7) throw ParseError("block lines need 7 labels");
      Block b{cls, {}};
      for (int k = 0; k < 7; ++k) {
        try {
          b.labels[size_t(k)] = std::stoi(tok[size_t(k)]);
        } catch (...) {
          throw ParseError("bad label: '" + tok[size_t(k)] + "'");
        }
      }
      d.blocks.push_back(b);
    }
    return d;
  }
  UDecomposition d;
  d.host = host;
  while (std::getline(is, line)) {
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    UBlock u;
    u.kind = ukind_from_name(tok[0]);
    for (size_t k = 1; k < tok.size(); ++k) {
      try {
        u.labels.push_back(std::stoi(tok[k]));
      } catch (...) {
        throw ParseError("bad label: '" + tok[k] + "'");
      }
    }
    d.blocks.push_back(std::move(u));
  }
  return d;
}

}  // namespace

ordered_json cert_to_json(const Decomposition& d) {
  ordered_json j;
  host_to_json(j, d.host);
  j["class"] = class_name(d.cls);
  auto blocks = ordered_json::array();
  for (const Block& b : d.blocks) {
    auto arr = ordered_json::array();
    for (Vertex l : b.labels) arr.push_back(l);
    blocks.push_back(std::move(arr));
  }
  j["blocks"] = std::move(blocks);
  if (!d.trace.step.empty()) j["trace"] = trace_to_json(d.trace);
  return j;
}

ordered_json ucert_to_json(const UDecomposition& d) {
  ordered_json j;
  host_to_json(j, d.host);
  auto blocks = ordered_json::array();
  for (const UBlock& b : d.blocks) {
    ordered_json e;
    e["kind"] = ukind_name(b.kind);
    e["labels"] = b.labels;
    blocks.push_back(std::move(e));
  }
  j["ublocks"] = std::move(blocks);
  return j;
}

std::string cert_to_text(const Decomposition& d) {
  std::ostringstream os;
  os << host_header(d.host) << " class " << class_name(d.cls) << "\n";
  for (const Block& b : d.blocks) {
    for (int j = 0; j < 7; ++j) os << (j ? " " : "") << b.labels[size_t(j)];
    os << "\n";
  }
  return os.str();
}

std::string ucert_to_text(const UDecomposition& d) {
  std::ostringstream os;
  os << host_header(d.host) << "\n";
  for (const UBlock& b : d.blocks) {
    os << ukind_name(b.kind);
    for (Vertex l : b.labels) os << " " << l;
    os << "\n";
  }
  return os.str();
}

AnyCert cert_from_string(const std::string& content) {
  size_t p = content.find_first_not_of(" \t\r\n");
  if (p == std::string::npos) throw ParseError("empty certificate");
  if (content[p] == '{') {
    json j;
    try {
      j = json::parse(content);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    return cert_from_json_value(j);
  }
  return cert_from_text(content);
}

AnyCert cert_from_file(const std::filesystem::path& path) {
  return cert_from_string(read_text_file(path));
}

ordered_json fixture_to_json(const FixtureRecord& r, bool with_checksum) {
  ordered_json j;
  host_to_json(j, r.host);
  j["class"] = record_class_name(r.cls);
  j["modulus"] = r.starters.modulus;
  j["infinity"] = r.starters.has_infinity;
  auto starters = ordered_json::array();
  for (const Starter& s : r.starters.starters) {
    ordered_json e;
    auto labels = ordered_json::array();
    for (Vertex l : s.block.labels) {
      if (l == kInf)
        labels.push_back("inf");
      else
        labels.push_back(l);
    }
    e["labels"] = std::move(labels);
    e["orbit"] = s.orbit;
    starters.push_back(std::move(e));
  }
  j["starters"] = std::move(starters);
  j["provenance"] = r.provenance;
  if (with_checksum) j["sha256"] = r.sha256;
  return j;
}

FixtureRecord fixture_from_json(const json& j) {
  FixtureRecord r;
  r.host = host_from_json(j);
  try {
    r.cls = record_class_from_name(j.at("class").get<std::string>());
    r.starters.modulus = j.at("modulus").get<int>();
    r.starters.has_infinity = j.at("infinity").get<bool>();
    for (const auto& e : j.at("starters")) {
      Starter s;
      s.block.cls = r.cls;
      const auto& labels = e.at("labels");
      if (!labels.is_array() || labels.size() != 7)
        throw ParseError("starters need 7 labels");
      for (int k = 0; k < 7; ++k) {
        const auto& l = labels[size_t(k)];
        if (l.is_string()) {
          if (l.get<std::string>() != "inf")
            throw ParseError("only 'inf' is a symbolic label");
          s.block.labels[size_t(k)] = kInf;
        } else {
          s.block.labels[size_t(k)] = l.get<int>();
        }
      }
      s.orbit = e.at("orbit").get<int>();
      r.starters.starters.push_back(s);
    }
    r.provenance = j.at("provenance").get<std::string>();
    r.sha256 = j.value("sha256", "");
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad fixture: ") + e.what());
  }
  return r;
}

std::string fixture_checksum(const FixtureRecord& r) {
  return sha256_hex(fixture_to_json(r, false).dump());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("short write to " + path.string());
}

}  // namespace heptad
