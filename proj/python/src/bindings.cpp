#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "unavoidable/certificates.hpp"
#include "unavoidable/error.hpp"
#include "unavoidable/graph.hpp"
#include "unavoidable/graph_io.hpp"
#include "unavoidable/oracle.hpp"
#include "unavoidable/pipeline.hpp"
#include "unavoidable/thresholds.hpp"

namespace py = pybind11;
using namespace unavoidable;

namespace {

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

// JSON crosses the boundary as text; the Python layer parses it.
std::string extract_json(const Graph& g, int r, const std::string& grs, std::uint64_t path_budget,
                         std::uint64_t window_budget) {
  Budgets budgets;
  budgets.induced_path = path_budget;
  budgets.subladder_windows = window_budget;
  budgets.thresholds = parse_grs_config(grs);
  return to_json(extract_unavoidable(g, r, budgets)).dump();
}

std::pair<bool, std::string> verify_json(const Graph& g, const std::string& doc) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(doc);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
  const Verdict v = check_certificate(g, certificate_from_json(parsed));
  return {v.ok, v.reason};
}

std::string oracle_json(const Graph& g, int r, std::size_t cap) { return to_json(brute_force_structures(g, r, cap)).dump(); }

py::object threshold_value(const std::string& name, const std::vector<std::string>& args, const std::string& grs) {
  std::vector<BigInt> values;
  for (const auto& a : args) {
    try {
      values.emplace_back(a);
    } catch (const std::exception&) {
      throw std::invalid_argument("threshold arguments must be integers: " + a);
    }
  }
  const Threshold t = evaluate_threshold(name, values, parse_grs_config(grs));
  const auto* v = std::get_if<BigInt>(&t);
  if (!v) return py::none();
  // Base 16 avoids the interpreter's cap on decimal conversions.
  const std::string hex = (*v < 0 ? "-" : "") + BigInt(abs(*v)).str(0, std::ios_base::hex);
  return py::reinterpret_steal<py::object>(PyLong_FromString(hex.c_str(), nullptr, 16));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certificates for unavoidable induced structures in 2-connected graphs";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def(
          "neighbors",
          [](const Graph& g, Vertex v) {
            if (!g.contains(v)) throw py::index_error("vertex out of range");
            return g.neighbors(v);
          },
          py::arg("v"))
      .def("adjacent", &Graph::adjacent)
      .def("to_graph6", [](const Graph& g) { return encode_graph6(g); })
      .def_static("from_graph6", [](const std::string& s) { return decode_graph6(s); }, py::arg("text"))
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("is_two_connected", &is_two_connected, py::arg("graph"));
  m.def(
      "longest_induced_path",
      [](const Graph& g, std::uint64_t budget) {
        const auto s = longest_induced_path(g, budget);
        return py::make_tuple(s.path.vertices, s.exhaustive);
      },
      py::arg("graph"), py::arg("budget") = 200'000);
  m.def("_extract", &extract_json);
  m.def("_verify", &verify_json);
  m.def("_oracle", &oracle_json);
  m.def("_threshold", &threshold_value);
  m.def("threshold_names", &threshold_names);
}
