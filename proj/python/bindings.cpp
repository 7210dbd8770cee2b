// JSON-in, JSON-out bindings; the Python package wraps them with json.loads.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deodhar/json_io.hpp"

namespace py = pybind11;
using namespace deodhar;

namespace {

std::string plucker(const std::string& diagram, const std::string& weights, std::uint64_t seed) {
  const GoDiagram d = diagram_from_json(parse_json(diagram));
  if (!weights.empty()) return plucker_to_json(sample_point(d, weights_from_json(parse_json(weights)))).dump();
  return plucker_to_json(sample_point(d, seed)).dump();
}

std::string check(const std::string& diagram) {
  const GoDiagram d = diagram_from_json(parse_json(diagram));
  const ValidationReport r = validate_filling(d);
  return Json{{"valid", r.valid}, {"dimension", d.dimension()}, {"is_le", r.valid && is_le_diagram(d)}}.dump();
}

std::string poset(const std::string& diagram) {
  return poset_to_json(fiber_poset(diagram_from_json(parse_json(diagram)))).dump();
}

std::string cell(const std::string& wld) {
  const SigmaCell c = sigma_cell(wld_from_json(parse_json(wld)));
  return Json{{"le", diagram_to_json(c.le)}, {"dimension", c.dimension}}.dump();
}

std::string monodromy(const std::string& wld, const std::string& family, std::uint64_t seed) {
  return monodromy_to_json(monodromy_sign(wld_from_json(parse_json(wld)), parse_family(family), seed)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.def("plucker", &plucker, py::arg("diagram"), py::arg("weights") = "", py::arg("seed") = 1);
  m.def("check", &check, py::arg("diagram"));
  m.def("fiber_poset", &poset, py::arg("diagram"));
  m.def("sigma_cell", &cell, py::arg("wld"));
  m.def("monodromy", &monodromy, py::arg("wld"), py::arg("family"), py::arg("seed") = 1);
  m.def("evaluate_word", [](int n, std::vector<int> letters) { return evaluate_word(Word{n, std::move(letters)}).one_line(); });
}
