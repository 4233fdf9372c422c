#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "honeymirror/branes.hpp"
#include "honeymirror/honeycomb.hpp"
#include "honeymirror/mf.hpp"
#include "honeymirror/mirror.hpp"
#include "honeymirror/report.hpp"

namespace py = pybind11;
using namespace hm;

namespace {

using Lift = std::vector<long long>;

LatticeVector vec(int n, const std::optional<Lift>& raw) {
  if (!raw) return LatticeVector::zero(n);
  if (static_cast<int>(raw->size()) != n + 1) throw py::value_error("lattice vector needs n + 1 coordinates");
  return LatticeVector(*raw);
}

HomEngine engine_from(const std::string& s) {
  if (s == "auto") return HomEngine::Auto;
  if (s == "monomial") return HomEngine::Monomial;
  if (s == "truncation") return HomEngine::Truncation;
  throw py::value_error("engine must be auto, monomial or truncation");
}

Subset subset_from(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= Subset(1) << e;
  return s;
}

py::tuple dims(int even, int odd) { return py::make_tuple(even, odd); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mirror symmetry checks on permutohedral honeycombs";

  py::register_exception<Inconclusive>(m, "Inconclusive", PyExc_RuntimeError);
  py::register_exception<MarginError>(m, "MarginError", PyExc_RuntimeError);
  py::register_exception<MethodNotApplicable>(m, "MethodNotApplicable", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("lattice_ball", [](int n, int radius) {
    std::vector<Lift> out;
    for (const auto& v : lattice_ball(LatticeVector::zero(n), radius)) out.push_back(v.lift());
    return out;
  }, py::arg("n"), py::arg("radius"), "Canonical lifts of lattice vectors within word norm `radius` of the origin.");

  m.def("census", [](int n) {
    const PermutohedronCensus c = build_permutohedron(n);
    py::dict d;
    d["n"] = c.n;
    d["counts_by_dim"] = c.counts_by_dim;
    py::dict types;
    for (const auto& [blocks, count] : c.types) types[py::tuple(py::cast(blocks))] = count;
    d["types"] = types;
    d["faces"] = c.faces.size();
    return d;
  }, py::arg("n"), "Face counts of the n-dimensional permutohedron.");

  py::class_<RankOneBrane>(m, "Brane")
      .def_property_readonly("parity", &RankOneBrane::parity)
      .def("shifted", &RankOneBrane::shifted, py::arg("p") = 1)
      .def("__repr__", &RankOneBrane::describe);

  m.def("brane", [](int n, std::optional<Lift> base, const std::vector<int>& directions, int parity) {
    return brane(vec(n, base), subset_from(directions), parity);
  }, py::arg("n"), py::arg("base") = std::nullopt, py::arg("directions") = std::vector<int>{}, py::arg("parity") = 0);

  m.def("skyscraper_at", [](int n, std::optional<Lift> base, int a) { return skyscraper_at(vec(n, base), a); },
        py::arg("n"), py::arg("base") = std::nullopt, py::arg("a") = 0);

  m.def("stalk", [](const RankOneBrane& g, int n, const std::vector<int>& facet, std::optional<Lift> side) {
    const LatticeVector s = vec(n, side);
    const StalkDims d = stalk(g, facet_for_subset(subset_from(facet), s), s);
    return dims(d.even, d.odd);
  }, py::arg("brane"), py::arg("n"), py::arg("facet"), py::arg("side") = std::nullopt,
     "Stalk of a brane on the facet of the cell at `side` facing the subset `facet`.");

  m.def("aside_hom", [](const RankOneBrane& source, const RankOneBrane& target, int radius, bool quiver) {
    const int n = source.n();
    const GlobalHomResult r = global_hom(source, target, LatticeVector::zero(n), radius,
                                         quiver ? HomMethod::RegionQuiver : HomMethod::PosetTotalComplex);
    return dims(r.dims.even, r.dims.odd);
  }, py::arg("source"), py::arg("target"), py::arg("radius") = 2, py::arg("quiver") = false,
     "Global Hom between branes on a window around the origin, with a margin check.");

  py::class_<EquivariantMF>(m, "EquivariantMF")
      .def_property_readonly("n", &EquivariantMF::n)
      .def_property_readonly("ranks", [](const EquivariantMF& mf) {
        const auto r = mf.ranks();
        return py::make_tuple(r.first, r.second);
      })
      .def("twist", [](const EquivariantMF& mf, const Lift& w) { return twist(mf, vec(mf.n(), w)); })
      .def("shift", [](const EquivariantMF& mf) { return shift(mf); });

  m.def("structure_mf", &structure_mf, py::arg("n"), py::arg("a"));
  m.def("koszul_mf", [](int n, const std::vector<int>& I) { return koszul_mf(n, subset_from(I)); }, py::arg("n"),
        py::arg("subset"));
  m.def("brane_mirror", [](int n, std::optional<Lift> base, const std::vector<int>& I) {
    return brane_mirror(n, vec(n, base), subset_from(I));
  }, py::arg("n"), py::arg("base") = std::nullopt, py::arg("directions") = std::vector<int>{});

  m.def("hom_cohomology", [](const EquivariantMF& a, const EquivariantMF& b, std::optional<Lift> weight,
                             const std::string& engine, int degree_cap) {
    const HomDims d = hom_cohomology(a, b, vec(a.n(), weight), engine_from(engine), degree_cap);
    return dims(d.even, d.odd);
  }, py::arg("source"), py::arg("target"), py::arg("weight") = std::nullopt, py::arg("engine") = "auto",
     py::arg("degree_cap") = 64);

  m.def("monomial_hom", [](int n, int a, const Lift& lambda, int p, int b, const Lift& mu, int q) {
    const HomDims d = monomial_hom(n, a, vec(n, lambda), p, b, vec(n, mu), q);
    return dims(d.even, d.odd);
  });

  m.def("check_acyclicity", [](int n, const std::vector<int>& order, int degree_cap) {
    const AcyclicityReport r = check_acyclicity(n, order, degree_cap);
    py::dict d;
    d["order"] = r.order;
    d["compositions_null"] = r.compositions_null;
    d["contractible"] = r.contractible;
    d["inconclusive"] = r.inconclusive;
    d["max_degree"] = r.max_degree;
    return d;
  }, py::arg("n"), py::arg("order"), py::arg("degree_cap") = 64);

  m.def("check_generators", [](int n, int twist_radius, int window_radius, bool equivariance) {
    const MirrorReport r = check_generators(n, twist_radius, window_radius, equivariance);
    py::dict d;
    d["verdict"] = to_string(r.verdict);
    d["cells"] = r.cells.size();
    std::size_t matched = 0;
    for (const auto& c : r.cells) matched += c.match ? 1 : 0;
    d["matched"] = matched;
    bool invariant = true;
    for (const auto& e : r.equivariance) invariant = invariant && e.aside_invariant && e.bside_invariant;
    d["equivariant"] = invariant;
    return d;
  }, py::arg("n"), py::arg("twist_radius") = 1, py::arg("window_radius") = 2, py::arg("equivariance") = true);

  m.def("run_report_json", [](const std::string& command, int n, int radius, int twist_radius, int degree_cap) {
    const Report r = run_report(RunConfig{command, n, radius, twist_radius, degree_cap, "json"});
    return py::make_tuple(r.json, to_string(r.verdict));
  });

  m.def("window_obj", &window_obj, py::arg("n"), py::arg("radius"));
}
