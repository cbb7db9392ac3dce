#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conjlab/conjugator.hpp"
#include "conjlab/domains.hpp"
#include "conjlab/errors.hpp"
#include "conjlab/harness.hpp"
#include "conjlab/raag.hpp"

namespace py = pybind11;
using namespace conjlab;

namespace {

std::string fmt(const DefiningGraph& g, const NormalForm& x) { return format_word(g, x.letters()); }

NormalForm el(const DefiningGraph& g, const std::string& w) { return parse_element(g, w); }

VertexSet vertex_set(const DefiningGraph& g, const std::vector<std::string>& names) {
  VertexSet s;
  for (const auto& n : names) s.insert(g.index(n));
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normal forms, conjugacy and hierarchy checks in right-angled Artin groups";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<DefiningGraph>(m, "Graph")
      .def(py::init<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>>(),
           py::arg("vertices"), py::arg("edges") = std::vector<std::pair<std::string, std::string>>{})
      .def_static("builtin", &builtin_graph, py::arg("name"))
      .def_static("from_json", &parse_graph_json, py::arg("text"))
      .def("to_json", [](const DefiningGraph& g) { return graph_to_json(g).dump(); })
      .def("__len__", &DefiningGraph::size)
      .def("name", &DefiningGraph::name, py::arg("index"))
      .def("adjacent", [](const DefiningGraph& g, const std::string& u, const std::string& v) {
        return g.adjacent(g.index(u), g.index(v));
      });

  m.def("nf", [](const DefiningGraph& g, const std::string& w) { return fmt(g, el(g, w)); },
        py::arg("graph"), py::arg("word"));
  m.def("mul",
        [](const DefiningGraph& g, const std::string& u, const std::string& v) {
          return fmt(g, multiply(g, el(g, u), el(g, v)));
        },
        py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def("inv", [](const DefiningGraph& g, const std::string& w) { return fmt(g, invert(g, el(g, w))); },
        py::arg("graph"), py::arg("word"));
  m.def("are_conjugate",
        [](const DefiningGraph& g, const std::string& a, const std::string& b) {
          return are_conjugate(g, el(g, a), el(g, b));
        },
        py::arg("graph"), py::arg("a"), py::arg("b"));
  m.def("find_conjugator",
        [](const DefiningGraph& g, const std::string& a, const std::string& b, double k, double c,
           bool minimize) -> py::object {
          FindOptions opts;
          opts.minimize = minimize;
          const auto cert = find_conjugator(g, el(g, a), el(g, b), k, c, opts);
          if (!cert.conjugate) return py::none();
          return py::str(fmt(g, cert.conjugator));
        },
        py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("k") = 2.0, py::arg("c") = 0.0,
        py::arg("minimize") = false);
  m.def("shorten",
        [](const DefiningGraph& g, const std::string& a, const std::string& b, const std::string& h) {
          return fmt(g, shorten_conjugator(g, el(g, a), el(g, b), el(g, h)));
        },
        py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("conjugator"));
  m.def("gate",
        [](const DefiningGraph& g, const std::string& x, const std::string& rep,
           const std::vector<std::string>& delta) {
          const Gate gt = gate(g, el(g, x), {el(g, rep), vertex_set(g, delta)});
          return py::make_tuple(fmt(g, gt.point), gt.distance);
        },
        py::arg("graph"), py::arg("x"), py::arg("rep"), py::arg("delta"));
  m.def("big_json",
        [](const DefiningGraph& g, const std::string& x) {
          const BigSet b = big(g, el(g, x));
          nlohmann::json j;
          j["maximal"] = b.maximal;
          j["domains"] = nlohmann::json::array();
          for (const auto& d : b.domains) j["domains"].push_back(domain_to_json(g, d));
          return j.dump();
        },
        py::arg("graph"), py::arg("word"));
  m.def("clf_csv",
        [](const DefiningGraph& g, std::size_t samples, std::size_t max_core, std::size_t max_twist,
           std::uint64_t seed) {
          ClfConfig cfg;
          cfg.samples = samples;
          cfg.max_core_len = max_core;
          cfg.max_twist_len = max_twist;
          cfg.seed = seed;
          std::ostringstream out;
          write_clf_csv(out, clf_experiment(g, cfg), {{"seed", std::to_string(seed)}});
          return out.str();
        },
        py::arg("graph"), py::arg("samples"), py::arg("max_core") = 6, py::arg("max_twist") = 6,
        py::arg("seed") = 7);
}
