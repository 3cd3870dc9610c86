#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "f2sumset/flatten.hpp"
#include "f2sumset/fourier.hpp"
#include "f2sumset/harness.hpp"
#include "f2sumset/report.hpp"
#include "f2sumset/setio.hpp"
#include "f2sumset/setstats.hpp"
#include "f2sumset/structure.hpp"

namespace py = pybind11;
using namespace f2sumset;

// Reports cross the boundary as JSON text; the Python package decodes them.
PYBIND11_MODULE(_core, m) {
  m.doc() = "Sumsets, spectra and subspace structure in F2^n";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  m.def("max_dimension", &max_dimension);

  py::class_<PointSet>(m, "PointSet")
      .def(py::init([](int n, const std::vector<Bits>& elems) {
             return PointSet::from_elements(n, elems);
           }),
           py::arg("n"), py::arg("elements") = std::vector<Bits>{})
      .def_static("full", &PointSet::full)
      .def_static("parse", &parse_set_text)
      .def_static("read", &read_set_file)
      .def_property_readonly("n", &PointSet::dimension)
      .def("__len__", &PointSet::size)
      .def("__contains__", &PointSet::contains)
      .def("elements", &PointSet::elements)
      .def("to_text", &format_set_text)
      .def("write", [](const PointSet& s, const std::string& path) { write_set_file(path, s); })
      .def(py::self == py::self)
      .def("__repr__", [](const PointSet& s) {
        return "PointSet(n=" + std::to_string(s.dimension()) + ", size=" +
               std::to_string(s.size()) + ")";
      });

  py::class_<Subspace>(m, "Subspace")
      .def(py::init<int>())
      .def_static("span", [](const std::vector<Bits>& v, int n) { return span(v, n); })
      .def_static("full", &Subspace::full)
      .def_property_readonly("n", &Subspace::ambient_dimension)
      .def_property_readonly("dim", &Subspace::dim)
      .def("__len__", &Subspace::size)
      .def("basis", [](const Subspace& h) {
        auto b = h.basis();
        return std::vector<Bits>(b.begin(), b.end());
      })
      .def("reduce", &Subspace::reduce)
      .def("__contains__", &Subspace::contains)
      .def("elements", &Subspace::elements)
      .def("to_point_set", &Subspace::to_point_set)
      .def("annihilator", [](const Subspace& h) { return annihilator(h); })
      .def(py::self == py::self);

  m.def("coset_decompose", &coset_decompose);

  m.def("wht", [](const std::vector<double>& f) { return wht(f).values; });
  m.def("indicator_transform", [](const PointSet& a) { return indicator_transform(a).values; });
  m.def("walsh_coefficients", &walsh_coefficients);
  m.def("spectrum", py::overload_cast<const PointSet&, double>(&spectrum));

  m.def("sumset", &sumset);
  m.def("_doubling", [](const PointSet& a, const PointSet& b) {
    return to_json(doubling(a, b)).dump();
  });
  m.def("_energy", [](const PointSet& a1, const PointSet& a2, const PointSet& a3,
                      const PointSet& a4, const std::string& method) {
    if (method == "direct") return to_json(energy_direct(a1, a2, a3, a4)).dump();
    if (method == "fourier") return to_json(energy_fourier(a1, a2, a3, a4)).dump();
    throw std::invalid_argument("method must be 'direct' or 'fourier'");
  });

  m.def("_check_flatness", [](const PointSet& a, const PointSet& b, double delta) {
    return to_json(check_flatness(a, b, delta), a.dimension()).dump();
  });
  m.def(
      "_flatten",
      [](const PointSet& a, const PointSet& b, double k, double step_coefficient) {
        FlatteningOptions opts;
        opts.step_coefficient = step_coefficient;
        FlatteningResult r = run_flattening(a, b, k, opts);
        Json j{{"j", r.j},
               {"final_verdict", to_json(r.final_verdict, a.dimension())},
               {"bucket_audit", to_json(bucket_audit(r.trace, k))},
               {"trace", to_json(r.trace, a.dimension())}};
        return py::make_tuple(std::move(r.a), std::move(r.b), j.dump());
      },
      py::arg("a"), py::arg("b"), py::arg("k"),
      py::arg("step_coefficient") = kDefaultStepCoefficient);
  m.def("_theorem4", [](const PointSet& a, const PointSet& b, double k) {
    StructureResult r = theorem4_pipeline(a, b, k);
    return py::make_tuple(r.h, to_json(r).dump());
  });

  m.def(
      "generate",
      [](const std::string& kind, int n, std::uint64_t seed, int dim, int cosets, int spread,
         double add_fraction, std::size_t remove, double density, bool paired) {
        GeneratorSpec s;
        s.kind = parse_generator_kind(kind);
        s.n = n;
        s.seed = seed;
        s.dim = dim;
        s.cosets = cosets;
        s.spread = spread;
        s.add_fraction = add_fraction;
        s.remove = remove;
        s.density = density;
        s.paired = paired;
        GeneratedInstance g = generate(s);
        return py::make_tuple(std::move(g.a), std::move(g.b), std::move(g.planted));
      },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 1, py::arg("dim") = 4,
      py::arg("cosets") = 2, py::arg("spread") = 1, py::arg("add_fraction") = 0.125,
      py::arg("remove") = 0, py::arg("density") = 0.5, py::arg("paired") = true);

  m.def("_oracle_check", [](std::size_t trials, std::uint64_t seed) {
    return to_json(run_oracle_check(trials, seed)).dump();
  });
  m.def("_campaign", [](const std::string& config_json) {
    const CampaignReport rep = run_campaign(parse_campaign_config(config_json));
    return py::make_tuple(campaign_csv(rep), campaign_json(rep));
  });
}
