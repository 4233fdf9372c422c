#include "honeymirror/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "honeymirror/sweeps.hpp"
#include "json.hpp"

namespace hm {

using json = nlohmann::json;

namespace {

json lift_json(const LatticeVector& v) { return json(v.lift()); }

json dims_json(int even, int odd) { return json{{"even", even}, {"odd", odd}}; }
json dims_json(const StalkDims& d) { return dims_json(d.even, d.odd); }
json dims_json(const HomDims& d) { return dims_json(d.even, d.odd); }

json point_json(const RationalPoint& p) { return json(p.str()); }

json subset_json(Subset s) { return json(subset_elements(s)); }

json envelope(const RunConfig& c) {
  return json{{"schema", kSchema},
              {"command", c.command},
              {"config", {{"n", c.n}, {"radius", c.radius}, {"twist_radius", c.twist_radius}, {"degree_cap", c.degree_cap}}}};
}

Report finish(json j, Verdict v) {
  j["verdict"] = to_string(v);
  return Report{j.dump(2) + "\n", v};
}

Verdict from_bool(bool ok) { return ok ? Verdict::Match : Verdict::Mismatch; }

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

void validate_config(const RunConfig& c) {
  static const std::set<std::string> commands{"build", "arboreal", "aside-hom", "bside-hom", "acyclic", "mirror"};
  if (!commands.count(c.command)) throw ConfigError("unknown command: " + c.command);
  const bool combinatorial = c.command == "build" || c.command == "arboreal";
  const int max_n = combinatorial ? 4 : 3;
  if (c.n < 1 || c.n > max_n) {
    throw ConfigError("n must be in [1, " + std::to_string(max_n) + "] for " + c.command);
  }
  if (c.radius < 1 || c.radius > 6) throw ConfigError("radius must be in [1, 6]");
  if (c.twist_radius < 0 || c.twist_radius > 6) throw ConfigError("twist radius must be in [0, 6]");
  if (c.degree_cap < c.n + 2 || c.degree_cap > 4096) throw ConfigError("degree cap must be in [n + 2, 4096]");
  if (c.format != "json" && c.format != "obj") throw ConfigError("format must be json or obj");
  if (c.format == "obj" && (c.command != "build" || c.n < 2 || c.n > 3)) {
    throw ConfigError("obj export is available for build with n = 2 or 3");
  }
}

Report build_report(const RunConfig& c) {
  json j = envelope(c);
  const PermutohedronCensus census = build_permutohedron(c.n);
  json types = json::array();
  for (const auto& [sizes, count] : census.types) types.push_back({{"block_sizes", sizes}, {"count", count}});
  json vertices = json::array();
  for (const auto& f : census.faces) {
    if (f.dim() == 0) vertices.push_back({{"face", f.str()}, {"position", point_json(vertex_position(f))}});
  }
  j["permutohedron"] = {{"counts_by_dim", census.counts_by_dim}, {"types", types}, {"vertices", vertices}};
  const FacePoset& w = cached_window(LatticeVector::zero(c.n), c.radius);
  std::vector<std::size_t> by_dim(c.n + 1, 0);
  json faces = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const HoneycombFace& f = w.faces()[i];
    ++by_dim[f.dim()];
    json inc = json::array();
    for (const auto& p : f.incident()) inc.push_back(lift_json(p));
    faces.push_back({{"face", f.str()}, {"dim", f.dim()}, {"incident", inc}, {"interior", w.interior(i)}});
  }
  j["window"] = {{"radius", c.radius}, {"faces_by_dim", by_dim}, {"covers", w.cover_count()}, {"faces", faces}};
  const bool ok = census.counts_by_dim.front() == factorial(c.n + 1) &&
                  census.counts_by_dim.back() == (1LL << (c.n + 1)) - 2;
  return finish(std::move(j), from_bool(ok));
}

Report arboreal_report(const RunConfig& c) {
  json j = envelope(c);
  const ArborealSummary s = arboreal_sweep(c.n, c.radius);
  const CyclicSummary cyc = cyclic_sweep(c.n, c.radius);
  j["arboreal"] = {{"faces", s.faces},
                   {"interior_faces", s.interior_faces},
                   {"interior_by_codim", s.interior_by_codim},
                   {"interior_vertices", s.interior_vertices},
                   {"link_failures", s.link_failures},
                   {"degree_failures", s.degree_failures}};
  j["cyclic"] = {{"action_checks", cyc.action_checks}, {"cover_checks", cyc.cover_checks}, {"failures", cyc.failures}};
  return finish(std::move(j), from_bool(s.pass() && cyc.pass()));
}

Report aside_report(const RunConfig& c) {
  json j = envelope(c);
  const int family = std::max(1, c.radius - 1);
  const CorepSummary s = corepresentability_sweep(c.n, c.radius, family);
  json cases = json::array();
  for (const auto& k : s.cases) {
    json e{{"skyscraper", k.skyscraper}, {"facet", k.facet},      {"side", lift_json(k.side)},
           {"target", k.target},         {"stalk", dims_json(k.expected)}, {"poset_total_complex", dims_json(k.poset)},
           {"match", k.match}};
    e["region_quiver"] = k.quiver ? dims_json(*k.quiver) : json(nullptr);
    cases.push_back(std::move(e));
  }
  j["corepresentability"] = {{"family_radius", family},
                             {"cases", cases},
                             {"mismatches", s.mismatches},
                             {"region_quiver_cases", s.quiver_cases},
                             {"region_quiver_mismatches", s.quiver_mismatches}};
  return finish(std::move(j), from_bool(s.pass()));
}

Report bside_report(const RunConfig& c) {
  json j = envelope(c);
  const EngineSummary s = engine_sweep(c.n, c.twist_radius, c.degree_cap);
  json table = json::array();
  for (const auto& cell : s.cells) {
    const HomDims alt = monomial_hom(c.n, cell.a, LatticeVector::zero(c.n), 0, cell.b, -cell.weight, 0);
    for (int parity = 0; parity < 2; ++parity) {
      auto pick = [parity](const HomDims& d) { return parity ? d.odd : d.even; };
      table.push_back({{"a", cell.a},
                       {"b", cell.b},
                       {"weight", lift_json(cell.weight)},
                       {"parity", parity},
                       {"monomial", pick(cell.monomial)},
                       {"truncation", pick(cell.truncation)},
                       {"negated_weight_reading", pick(alt)}});
    }
  }
  j["hom_table"] = table;
  j["checks"] = {{"engines_agree", s.engines_agree},
                 {"dims_binary", s.dims_binary},
                 {"identity_classes", s.identity_classes},
                 {"f_classes", s.f_classes}};
  return finish(std::move(j), from_bool(s.pass()));
}

namespace {

json acyclicity_json(const std::vector<AcyclicityReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    out.push_back({{"order", r.order},
                   {"compositions_null", r.compositions_null},
                   {"contractible", r.contractible},
                   {"inconclusive", r.inconclusive},
                   {"max_degree", r.max_degree}});
  }
  return out;
}

Verdict acyclicity_verdict(const std::vector<AcyclicityReport>& reports) {
  bool ok = true, inconclusive = false;
  for (const auto& r : reports) {
    inconclusive = inconclusive || r.inconclusive;
    ok = ok && r.compositions_null && r.contractible;
  }
  return inconclusive ? Verdict::Inconclusive : from_bool(ok);
}

}  // namespace

Report acyclic_report(const RunConfig& c) {
  json j = envelope(c);
  const auto reports = acyclicity_sweep(c.n, c.degree_cap);
  j["acyclicity"] = acyclicity_json(reports);
  return finish(std::move(j), acyclicity_verdict(reports));
}

Report mirror_report(const RunConfig& c) {
  json j = envelope(c);
  const MirrorReport m = check_generators(c.n, c.twist_radius, c.radius, true);
  json cells = json::array();
  for (const auto& cell : m.cells) {
    cells.push_back({{"a", cell.a},
                     {"b", cell.b},
                     {"weight", lift_json(cell.weight)},
                     {"aside", dims_json(cell.aside)},
                     {"bside", dims_json(cell.bside)},
                     {"bside_negated_weight", dims_json(cell.bside_alt)},
                     {"match", cell.match}});
  }
  json eq = json::array();
  for (const auto& e : m.equivariance) {
    eq.push_back({{"generator", e.generator}, {"aside_invariant", e.aside_invariant}, {"bside_invariant", e.bside_invariant}});
  }
  j["generators"] = {{"base", lift_json(m.base)},
                     {"cells", cells},
                     {"equivariance", eq},
                     {"conventions", m.conventions},
                     {"verdict", to_string(m.verdict)}};

  const RelationsReport r = check_relations(c.n, c.radius, 1, c.degree_cap);
  json cones = json::array();
  for (const auto& k : r.cones) {
    cones.push_back({{"base", lift_json(k.base)}, {"directions", subset_json(k.directions)}, {"i", k.i}, {"pass", k.pass}});
  }
  json koszul = json::array();
  for (const auto& k : r.koszul) {
    koszul.push_back({{"I", subset_json(k.I)},
                      {"a", k.a},
                      {"weight", lift_json(k.weight)},
                      {"aside", dims_json(k.aside)},
                      {"bside", dims_json(k.bside)},
                      {"match", k.match}});
  }
  json ends = json::array();
  for (const auto& k : r.ends) {
    ends.push_back({{"I", subset_json(k.I)},
                    {"weight", lift_json(k.weight)},
                    {"aside", dims_json(k.aside)},
                    {"bside", dims_json(k.bside)},
                    {"match", k.match}});
  }
  j["relations"] = {{"twist_radius", r.twist_radius},
                    {"acyclicity", acyclicity_json(r.acyclicity)},
                    {"acyclicity_verdict", to_string(r.acyclicity_verdict)},
                    {"cones", cones},
                    {"cone_verdict", to_string(r.cone_verdict)},
                    {"brane_family", koszul},
                    {"sphere_homs", ends},
                    {"brane_family_verdict", to_string(r.koszul_verdict)},
                    {"verdict", to_string(r.verdict)}};
  return finish(std::move(j), combine(m.verdict, r.verdict));
}

Report run_report(const RunConfig& c) {
  validate_config(c);
  if (c.command == "build") return build_report(c);
  if (c.command == "arboreal") return arboreal_report(c);
  if (c.command == "aside-hom") return aside_report(c);
  if (c.command == "bside-hom") return bside_report(c);
  if (c.command == "acyclic") return acyclic_report(c);
  return mirror_report(c);
}

namespace {

std::string fmt(double x) {
  if (std::fabs(x) < 5e-13) x = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

}  // namespace

std::string window_obj(int n, int radius) {
  if (n != 2 && n != 3) throw ConfigError("window_obj: n must be 2 or 3");
  const FacePoset& w = cached_window(LatticeVector::zero(n), radius);
  std::map<HoneycombFace, std::size_t> vertex_index;
  std::vector<HoneycombFace> vertices;
  auto vid = [&](const HoneycombFace& v) {
    auto it = vertex_index.find(v);
    if (it != vertex_index.end()) return it->second;
    vertices.push_back(v);
    return vertex_index[v] = vertices.size();
  };
  std::vector<std::vector<std::size_t>> elements;
  for (const auto& f : w.faces()) {
    if (f.dim() != n - 1) continue;
    if (n == 2) {
      const auto ends = subfaces(f, 0);
      elements.push_back({vid(ends.at(0)), vid(ends.at(1))});
      continue;
    }
    std::map<HoneycombFace, std::vector<HoneycombFace>> adj;
    for (const auto& e : subfaces(f, 1)) {
      const auto ends = subfaces(e, 0);
      adj[ends.at(0)].push_back(ends.at(1));
      adj[ends.at(1)].push_back(ends.at(0));
    }
    std::vector<std::size_t> loop;
    HoneycombFace prev, cur = adj.begin()->first;
    for (std::size_t k = 0; k < adj.size(); ++k) {
      loop.push_back(vid(cur));
      const auto& nb = adj.at(cur);
      HoneycombFace next = (k > 0 && nb.at(0) == prev) ? nb.at(1) : nb.at(0);
      prev = cur;
      cur = next;
    }
    elements.push_back(std::move(loop));
  }
  std::string out = "# honeycomb window n=" + std::to_string(n) + " radius=" + std::to_string(radius) + "\n";
  for (const auto& v : vertices) {
    std::vector<double> x = embed_orthonormal(vertex_position(v));
    x.resize(3, 0.0);
    out += "v " + fmt(x[0]) + " " + fmt(x[1]) + " " + fmt(x[2]) + "\n";
  }
  for (const auto& e : elements) {
    out += n == 2 ? "l" : "f";
    for (std::size_t i : e) out += " " + std::to_string(i);
    out += "\n";
  }
  return out;
}

}  // namespace hm
