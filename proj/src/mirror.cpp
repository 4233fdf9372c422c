#include "honeymirror/mirror.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace hm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "match";
    case Verdict::Mismatch:
      return "mismatch";
    default:
      return "inconclusive";
  }
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  if (a == Verdict::Mismatch || b == Verdict::Mismatch) return Verdict::Mismatch;
  return Verdict::Match;
}

namespace {

bool same(const StalkDims& a, const HomDims& b) { return a.even == b.even && a.odd == b.odd; }

Verdict all_match(bool ok) { return ok ? Verdict::Match : Verdict::Mismatch; }

std::string describe_generator(const WeylElement& g) {
  const auto& p = g.perm();
  bool is_identity = true;
  for (std::size_t i = 0; i < p.size(); ++i) is_identity = is_identity && p[i] == static_cast<int>(i);
  if (is_identity) return "translate " + g.translation_part().str();
  std::string s = "swap";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) s += " " + std::to_string(i);
  }
  return s;
}

struct CellKey {
  int a, b;
  LatticeVector weight;
};

std::vector<CellKey> generator_keys(int n, int twist_radius) {
  std::vector<CellKey> keys;
  const auto ball = lattice_ball(LatticeVector::zero(n), twist_radius);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      for (const auto& w : ball) keys.push_back({a, b, w});
    }
  }
  return keys;
}

}  // namespace

MirrorReport check_generators(int n, int twist_radius, int window_radius, bool equivariance) {
  if (n < 1 || n > 3) throw std::invalid_argument("check_generators: requires 1 <= n <= 3");
  if (twist_radius < 0 || window_radius < 1) throw std::invalid_argument("check_generators: invalid radius");
  const auto start = std::chrono::steady_clock::now();
  MirrorReport report;
  report.n = n;
  report.twist_radius = twist_radius;
  report.window_radius = window_radius;
  report.base = LatticeVector::zero(n);
  report.conventions = {
      "A-side twist <lambda> is translation of the brane by lambda",
      "entry z^u from basis s to basis t has weight(u) = weight(s) - weight(t)",
      "O^a has even generator of weight 0 and odd generator of weight lambda_a",
      "dictionary O^a<lambda> <-> delta_{F_a,P}<lambda>, normalized at lambda = 0",
      "bside_alt reads the twist with the opposite sign",
  };
  const LatticeVector& P = report.base;
  const auto keys = generator_keys(n, twist_radius);
  report.cells = parallel_map<GeneratorCell>(keys.size(), [&](std::size_t k) {
    const CellKey& key = keys[k];
    GeneratorCell c{key.a, key.b, key.weight, {}, {}, {}, false};
    c.aside = global_hom(skyscraper_at(P, key.a), skyscraper_at(P + key.weight, key.b), P, window_radius).dims;
    const EquivariantMF Ma = structure_mf(n, key.a);
    const EquivariantMF Mb = structure_mf(n, key.b);
    c.bside = hom_cohomology(Ma, Mb, key.weight);
    c.bside_alt = hom_cohomology(Ma, Mb, -key.weight);
    c.match = same(c.aside, c.bside);
    return c;
  });
  bool ok = std::all_of(report.cells.begin(), report.cells.end(), [](const GeneratorCell& c) { return c.match; });
  if (equivariance) {
    for (const WeylElement& g : WeylElement::generators(n)) {
      const LatticeVector Pg = g.apply(P);
      const auto acted = parallel_map<std::pair<StalkDims, HomDims>>(keys.size(), [&](std::size_t k) {
        const CellKey& key = keys[k];
        const RankOneBrane src = weyl_act_brane(g, skyscraper_at(P, key.a));
        const RankOneBrane dst = weyl_act_brane(g, skyscraper_at(P + key.weight, key.b));
        const StalkDims a = global_hom(src, dst, Pg, window_radius).dims;
        const EquivariantMF Ma = act(g, structure_mf(n, key.a));
        const EquivariantMF Mb = act(g, twist(structure_mf(n, key.b), key.weight));
        const HomDims b = hom_cohomology(Ma, Mb, HomEngine::Truncation);
        return std::make_pair(a, b);
      });
      EquivarianceCheck e{describe_generator(g), true, true};
      for (std::size_t k = 0; k < keys.size(); ++k) {
        e.aside_invariant = e.aside_invariant && acted[k].first == report.cells[k].aside;
        e.bside_invariant = e.bside_invariant && acted[k].second == report.cells[k].bside;
      }
      ok = ok && e.aside_invariant && e.bside_invariant;
      report.equivariance.push_back(e);
    }
  }
  report.verdict = all_match(ok);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

EquivariantMF brane_mirror(int n, const LatticeVector& base, Subset I) {
  const Subset comp = full_subset(n) & ~I;
  EquivariantMF k = twist(koszul_mf(n, I), LatticeVector::lambda(n, comp) + base);
  return subset_size(comp) % 2 ? shift(k) : k;
}

std::vector<AcyclicityReport> acyclicity_sweep(int n, int degree_cap) {
  std::vector<std::vector<int>> orders;
  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  do {
    orders.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return parallel_map<AcyclicityReport>(orders.size(),
                                        [&](std::size_t k) { return check_acyclicity(n, orders[k], degree_cap); });
}

std::vector<ConeCheck> cone_sweep(int n, int window_radius) {
  std::vector<ConeCheck> keys;
  const LatticeVector origin = LatticeVector::zero(n);
  for (const auto& P : lattice_ball(origin, std::max(0, window_radius - 1))) {
    for (Subset J = 1; J < full_subset(n); ++J) {
      for (int i : subset_elements(J)) keys.push_back(ConeCheck{P, J, i, false});
    }
  }
  const FacePoset& window = cached_window(origin, window_radius);
  return parallel_map<ConeCheck>(keys.size(), [&](std::size_t k) {
    ConeCheck c = keys[k];
    c.pass = cone_check(c.i, c.base, c.directions, window);
    return c;
  });
}

RelationsReport check_relations(int n, int window_radius, int twist_radius, int degree_cap) {
  if (n < 1 || n > 3) throw std::invalid_argument("check_relations: requires 1 <= n <= 3");
  RelationsReport r;
  r.n = n;
  r.window_radius = window_radius;
  r.twist_radius = twist_radius;
  r.degree_cap = degree_cap;

  r.acyclicity = acyclicity_sweep(n, degree_cap);
  bool inconclusive = false, ok = true;
  for (const auto& a : r.acyclicity) {
    inconclusive = inconclusive || a.inconclusive;
    ok = ok && a.compositions_null && a.contractible;
  }
  r.acyclicity_verdict = inconclusive ? Verdict::Inconclusive : all_match(ok);

  r.cones = cone_sweep(n, window_radius);
  r.cone_verdict = all_match(std::all_of(r.cones.begin(), r.cones.end(), [](const ConeCheck& c) { return c.pass; }));

  const LatticeVector origin = LatticeVector::zero(n);
  const auto ball = lattice_ball(origin, twist_radius);
  std::vector<KoszulCell> keys;
  for (Subset I = 0; I < full_subset(n); ++I) {
    for (int a = 0; a <= n; ++a) {
      for (const auto& w : ball) keys.push_back(KoszulCell{I, a, w, {}, {}, false});
    }
  }
  const int radius = twist_radius + 1;
  r.koszul = parallel_map<KoszulCell>(keys.size(), [&](std::size_t k) {
    KoszulCell c = keys[k];
    c.aside = global_hom(skyscraper_at(c.weight, c.a), brane(origin, c.I), origin, radius).dims;
    c.bside = hom_cohomology(twist(structure_mf(n, c.a), c.weight), brane_mirror(n, origin, c.I));
    c.match = same(c.aside, c.bside);
    return c;
  });
  std::vector<EndCell> end_keys;
  for (Subset I = 0; I < full_subset(n); ++I) {
    for (const auto& w : ball) end_keys.push_back(EndCell{I, w, {}, {}, false});
  }
  r.ends = parallel_map<EndCell>(end_keys.size(), [&](std::size_t k) {
    EndCell c = end_keys[k];
    c.aside = global_hom(brane(c.weight, 0), brane(origin, c.I), origin, radius).dims;
    c.bside = hom_cohomology(brane_mirror(n, c.weight, 0), brane_mirror(n, origin, c.I));
    c.match = same(c.aside, c.bside);
    return c;
  });
  r.koszul_verdict = all_match(std::all_of(r.koszul.begin(), r.koszul.end(), [](auto& c) { return c.match; }) &&
                               std::all_of(r.ends.begin(), r.ends.end(), [](auto& c) { return c.match; }));
  r.verdict = combine(combine(r.acyclicity_verdict, r.cone_verdict), r.koszul_verdict);
  return r;
}

}  // namespace hm
