#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weakore/catalog.hpp"
#include "weakore/coderivation.hpp"
#include "weakore/fixtures.hpp"
#include "weakore/grouplike.hpp"
#include "weakore/ore.hpp"
#include "weakore/panov.hpp"
#include "weakore/spec_io.hpp"

namespace py = pybind11;
using namespace weakore;

namespace {

template <class Map>
const auto& named(const Map& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw AlgebraError(ErrorKind::ParseError, std::string("spec has no ") + what + " named '" + name + "'");
    return it->second;
}

Vector element(const AlgebraSpec& spec, const WeakBialgebra& wb, const std::string& name) {
    if (name == "1") return wb.algebra().one();
    return named(spec.elements, name, "element");
}

std::vector<Scalar> scalars(const std::vector<std::string>& in) {
    std::vector<Scalar> out;
    for (const auto& s : in) out.push_back(Field::rationals().parse(s));
    return out;
}

std::vector<std::string> strings(const Vector& v) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v[i].to_string());
    return out;
}

struct Verdict {
    bool passed;
    std::string text;
    std::optional<std::vector<std::string>> chi;
    AxiomReport report;
};

Verdict to_verdict(const PanovVerdict& v, const std::vector<std::string>& labels) {
    Verdict out{v.passed, v.to_text(labels), std::nullopt, v.report};
    if (v.chi) out.chi = strings(v.chi->coeffs);
    return out;
}

AxiomReport check(const AlgebraSpec& spec) {
    const WeakBialgebra wb = build_weak_bialgebra(spec);
    AxiomReport r = check_weak_bialgebra(wb);
    r.merge(check_counital_projections(wb));
    if (spec.antipode) r.merge(check_antipode(WeakHopfAlgebra{wb, *spec.antipode}));
    return r;
}

Verdict panov(const AlgebraSpec& spec, bool hopf, const std::string& sigma, const std::string& delta,
              const std::string& g) {
    const WeakBialgebra wb = build_weak_bialgebra(spec);
    const Matrix& s = named(spec.maps, sigma, "map");
    const Matrix& d = named(spec.maps, delta, "map");
    const Vector ge = element(spec, wb, g);
    if (hopf) return to_verdict(hopf_conditions(build_weak_hopf_algebra(spec), s, d, ge), wb.labels());
    return to_verdict(panov_sufficient(wb, s, d, ge), wb.labels());
}

AxiomReport ore_build(const AlgebraSpec& spec, std::size_t degree, const std::string& sigma, const std::string& delta,
                      const std::string& g) {
    const WeakBialgebra wb = build_weak_bialgebra(spec);
    const OreAlgebra ore =
        OreAlgebra::make(wb, named(spec.maps, sigma, "map"), named(spec.maps, delta, "map"), spec.antipode);
    const Vector ge = element(spec, wb, g);
    OreExtension ext = extend_coalgebra(ore, ge);
    if (spec.antipode && hopf_conditions(WeakHopfAlgebra{wb, *spec.antipode}, ore.sigma(), ore.delta(), ge).passed)
        ext = extend_antipode(ext);
    return verify_extension(ext, degree);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weak Hopf algebras given by structure constants and their Ore extensions";

    py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ValueError);
    py::register_exception<ScalarError>(m, "ScalarError", PyExc_ValueError);

    py::class_<AxiomReport>(m, "Report")
        .def("passed", py::overload_cast<>(&AxiomReport::passed, py::const_))
        .def("entry_passed", py::overload_cast<const std::string&>(&AxiomReport::passed, py::const_), py::arg("name"))
        .def("has", &AxiomReport::has, py::arg("name"))
        .def_property_readonly("failed_names", &AxiomReport::failed_names)
        .def_property_readonly("names",
                               [](const AxiomReport& r) {
                                   std::vector<std::string> out;
                                   for (const auto& e : r.entries()) out.push_back(e.name);
                                   return out;
                               })
        .def_property_readonly("hypotheses",
                               [](const AxiomReport& r) {
                                   std::map<std::string, bool> out(r.hypotheses().begin(), r.hypotheses().end());
                                   return out;
                               })
        .def_property_readonly("infos",
                               [](const AxiomReport& r) {
                                   std::map<std::string, std::string> out(r.infos().begin(), r.infos().end());
                                   return out;
                               })
        .def("witness",
             [](const AxiomReport& r, const std::string& name) -> std::optional<std::vector<std::string>> {
                 const ReportEntry* e = r.find(name);
                 if (!e || e->failures.empty()) return std::nullopt;
                 return e->failures.front().labels;
             })
        .def("to_text", &AxiomReport::to_text)
        .def("__repr__", &AxiomReport::to_text);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("passed", &Verdict::passed)
        .def_readonly("text", &Verdict::text)
        .def_readonly("chi", &Verdict::chi)
        .def_readonly("report", &Verdict::report);

    py::class_<AlgebraSpec>(m, "Spec")
        .def_static("parse", &parse_spec, py::arg("text"))
        .def_static("load", &load_spec, py::arg("path"))
        .def("emit", &emit_spec)
        .def_property_readonly("dim", &AlgebraSpec::dim)
        .def_readonly("labels", &AlgebraSpec::labels)
        .def_property_readonly("field", [](const AlgebraSpec& s) { return s.field.describe(); })
        .def_property_readonly("has_antipode", [](const AlgebraSpec& s) { return s.antipode.has_value(); })
        .def_property_readonly("elements",
                               [](const AlgebraSpec& s) {
                                   std::map<std::string, std::vector<std::string>> out;
                                   for (const auto& [k, v] : s.elements) out[k] = strings(v);
                                   return out;
                               })
        .def_property_readonly("functionals",
                               [](const AlgebraSpec& s) {
                                   std::map<std::string, std::vector<std::string>> out;
                                   for (const auto& [k, v] : s.functionals) out[k] = strings(v);
                                   return out;
                               })
        .def_property_readonly("maps",
                               [](const AlgebraSpec& s) {
                                   // column lists, as in the file format
                                   std::map<std::string, std::vector<std::vector<std::string>>> out;
                                   for (const auto& [k, mat] : s.maps)
                                       for (const auto& c : mat.columns()) out[k].push_back(strings(c));
                                   return out;
                               })
        .def("__eq__", &same_spec);

    m.def("check", &check, py::arg("spec"), "Weak bialgebra, counital projection and antipode checks.");
    m.def("panov", &panov, py::arg("spec"), py::arg("hopf") = false, py::arg("sigma") = "sigma",
          py::arg("delta") = "delta", py::arg("g") = "g");
    m.def("necessary", [](const AlgebraSpec& spec, const std::string& sigma, const std::string& delta,
                          const std::string& g) {
        const WeakBialgebra wb = build_weak_bialgebra(spec);
        return to_verdict(panov_necessary(wb, named(spec.maps, sigma, "map"), named(spec.maps, delta, "map"),
                                          element(spec, wb, g)),
                          wb.labels());
    }, py::arg("spec"), py::arg("sigma") = "sigma", py::arg("delta") = "delta", py::arg("g") = "g");
    m.def("ore_build", &ore_build, py::arg("spec"), py::arg("degree") = 3, py::arg("sigma") = "sigma",
          py::arg("delta") = "delta", py::arg("g") = "g");
    m.def("matrix_grouplike_counts",
          [](std::size_t n) {
              const auto found = enumerate_weak_grouplikes_matrix(n);
              std::size_t inv = 0;
              for (const auto& g : found.nonzero) inv += g.is_invertible;
              return std::make_pair(found.nonzero.size(), inv);
          },
          py::arg("n"), "(nonzero weak group-likes, invertible ones) in M_n(Q).");
    m.def("coderivation_dimension",
          [](const AlgebraSpec& spec, const std::string& g, const std::string& h) {
              const WeakBialgebra wb = build_weak_bialgebra(spec);
              return coderivation_space(wb, element(spec, wb, g), element(spec, wb, h)).size();
          },
          py::arg("spec"), py::arg("g") = "1", py::arg("h") = "1");

    auto ex = m.def_submodule("examples", "Ready-made specs");
    ex.def("sweedler_data", &sweedler_data_spec);
    ex.def("matrix", &matrix_spec, py::arg("n"));
    ex.def("groupoid", &groupoid_spec, py::arg("m"), py::arg("n"));
    ex.def("section5",
           [](std::size_t m, std::size_t n, const std::vector<std::string>& rho, std::optional<std::vector<std::string>> q) {
               std::vector<std::string> qs = q ? *q : std::vector<std::string>(n, "1");
               return section5_spec(m, n, scalars(rho), scalars(qs));
           },
           py::arg("m"), py::arg("n"), py::arg("rho"), py::arg("q") = py::none());
}
