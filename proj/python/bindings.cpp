#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfinv/fixtures.hpp"
#include "hopfinv/fuzz.hpp"
#include "hopfinv/report.hpp"

namespace py = pybind11;
using namespace hopfinv;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ComoduleAlgebra from_any(const py::object& o) {
  if (py::isinstance<py::str>(o)) return instance_from_json(Json::parse(o.cast<std::string>()));
  return instance_from_json(from_python(o));
}

std::vector<std::string> formatted(const FiniteAlgebra& a, const std::vector<Vec>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(a.format(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(hopfinv, m) {
  m.doc() = "Invariants of finite Hopf algebra coactions on finite commutative algebras";

  py::register_exception<Error>(m, "InstanceError", PyExc_ValueError);

  py::class_<ComoduleAlgebra>(m, "Instance")
      .def_property_readonly("field", [](const ComoduleAlgebra& c) { return c.field().name(); })
      .def_property_readonly("dim_a", &ComoduleAlgebra::dim)
      .def_property_readonly("dim_h", &ComoduleAlgebra::hopf_dim)
      .def_property_readonly("labels", [](const ComoduleAlgebra& c) { return c.algebra().labels(); })
      .def("to_json", [](const ComoduleAlgebra& c) { return to_python(instance_to_json(c)); })
      .def("canonical", &canonical_text)
      .def("digest", &instance_digest)
      .def("invariants",
           [](const ComoduleAlgebra& c) {
             const Subspace s = invariants(c);
             return formatted(c.algebra(), s.basis());
           })
      .def("is_h_reduced", &is_h_reduced)
      .def("is_h_simple", &is_h_simple)
      .def(
          "charpoly",
          [](const ComoduleAlgebra& c, const std::string& elem) {
            const auto cp = coaction_charpoly(c, c.algebra().parse(elem));
            return py::make_tuple(formatted(c.algebra(), cp.coeffs), cp.invariant_flags);
          },
          py::arg("elem"), "Coefficients low to high and their invariance flags.")
      .def(
          "fiber_sizes",
          [](const ComoduleAlgebra& c) {
            std::vector<std::size_t> out;
            for (const auto& q : invariant_contractions(c)) out.push_back(fiber(c, q).size());
            return out;
          },
          "Number of maximal ideals over each contraction to A^H.")
      .def("is_galois", [](const ComoduleAlgebra& c) { return is_galois(c).galois(); })
      .def("has_total_integral", [](const ComoduleAlgebra& c) { return integral_space(c).has_total; })
      .def("reductivity_certificate",
           [](const ComoduleAlgebra& c) {
             const auto r = weak_reductivity_certificate(c);
             return r.which ? std::string(1, r.which) : std::string("none");
           })
      .def(
          "report",
          [](const ComoduleAlgebra& c, std::optional<std::vector<std::string>> sections) {
            return to_python(run_report(c, sections.value_or(report_sections())).json);
          },
          py::arg("sections") = py::none())
      .def("__repr__", [](const ComoduleAlgebra& c) {
        return "<Instance over " + c.field().name() + ", dim A = " + std::to_string(c.dim()) +
               ", dim H = " + std::to_string(c.hopf_dim()) + ">";
      });

  m.def("load", &parse_instance, py::arg("path"), "Read and validate an instance file.");
  m.def("from_json", &from_any, py::arg("instance"), "Instance from a JSON string or a parsed object.");
  m.def("fixtures", [] {
    py::dict out;
    for (auto& [name, c] : fixture_corpus()) out[py::str(name)] = py::cast(std::move(c));
    return out;
  });
  m.def("report_sections", &report_sections);
  m.def(
      "fuzz",
      [](std::uint64_t seed, std::size_t count, const std::string& field, std::size_t max_dim,
         std::size_t max_tensor) {
        FuzzOptions o{seed, count, field, max_dim, max_tensor};
        return to_python(run_fuzz(o).to_json());
      },
      py::arg("seed") = 0, py::arg("count") = 10, py::arg("field") = "mixed", py::arg("max_dim") = 4,
      py::arg("max_tensor") = 24);
}
