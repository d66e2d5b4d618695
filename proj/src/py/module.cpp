#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>
#include <vector>

#include "heptad/assembly.hpp"
#include "heptad/catalog.hpp"
#include "heptad/certio.hpp"
#include "heptad/errors.hpp"
#include "heptad/fixtures.hpp"
#include "heptad/verify.hpp"

namespace py = pybind11;
using namespace heptad;

namespace {

int class_id(const std::string& name) { return record_class_from_name(name); }

std::string py_generate(int v, const std::string& cls,
                        const std::string& format) {
  Decomposition d = generate(v, class_id(cls));
  if (format == "json") return cert_to_json(d).dump(2) + "\n";
  if (format == "text") return cert_to_text(d);
  throw ParseError("format must be 'text' or 'json'");
}

py::tuple py_verify(const std::string& content) {
  AnyCert cert = cert_from_string(content);
  if (const auto* d = std::get_if<Decomposition>(&cert))
    return py::make_tuple(verify(*d).ok, diagnose(*d));
  const auto& u = std::get<UDecomposition>(cert);
  return py::make_tuple(verify_undirected(u.blocks, u.host).ok,
                        diagnose_undirected(u.blocks, u.host));
}

std::string py_plan(int v, const std::string& cls) {
  Decomposition d;
  d.host = HostSpec::kstar(v);
  d.cls = class_id(cls);
  d.trace = plan(v, d.cls);
  return cert_to_json(d)["trace"].dump(2);
}

std::vector<int> py_spectrum(int max) {
  std::vector<int> out;
  for (int v = 7; v <= max; ++v)
    if (v % 7 <= 1) out.push_back(v);
  return out;
}

std::vector<py::dict> py_classes() {
  std::vector<py::dict> out;
  for (int cls = 1; cls <= kNumClasses; ++cls) {
    py::dict d;
    d["name"] = record_class_name(cls);
    d["word"] = word_string(word_of_class(cls));
    d["reverse"] = record_class_name(reverse_class(cls));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<py::dict> py_fixtures() {
  std::vector<py::dict> out;
  for (const FixtureRecord& r : Registry::instance().records()) {
    py::dict d;
    d["host"] = r.host.key();
    d["cls"] = record_class_name(r.cls);
    d["provenance"] = r.provenance;
    d["sha256"] = r.sha256;
    size_t blocks = 0;
    for (const Starter& s : r.starters.starters) blocks += size_t(s.orbit);
    d["blocks"] = blocks;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_heptad, m) {
  m.doc() = "decompositions of complete symmetric digraphs into oriented "
            "heptagons";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotAdmissible& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("generate", &py_generate, py::arg("v"), py::arg("cls"),
        py::arg("format") = "text",
        "Build a verified decomposition of K*_v and return the certificate.");
  m.def("verify", &py_verify, py::arg("certificate"),
        "Check a certificate; returns (ok, diagnosis).");
  m.def("plan", &py_plan, py::arg("v"), py::arg("cls"),
        "Return the construction tree as JSON, without building blocks.");
  m.def("spectrum", &py_spectrum, py::arg("max") = 210,
        "Admissible orders up to max.");
  m.def("classes", &py_classes,
        "The ten heptagon classes with canonical words and reverse partners.");
  m.def("fixtures", &py_fixtures, "The stored base designs.");
}
