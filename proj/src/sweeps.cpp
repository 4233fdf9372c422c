#include "honeymirror/sweeps.hpp"

#include <algorithm>

#include "honeymirror/mirror.hpp"

namespace hm {

ArborealSummary arboreal_sweep(int n, int radius) {
  ArborealSummary s;
  s.n = n;
  s.radius = radius;
  const FacePoset& w = cached_window(LatticeVector::zero(n), radius);
  s.faces = w.size();
  s.interior_by_codim.assign(n + 1, 0);
  std::vector<std::size_t> interior;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.interior(i)) interior.push_back(i);
  }
  s.interior_faces = interior.size();
  const auto ok = parallel_map<char>(interior.size(),
                                     [&](std::size_t k) { return is_arboreal_link(w.faces()[interior[k]], w) ? 1 : 0; });
  for (std::size_t k = 0; k < interior.size(); ++k) {
    const HoneycombFace& f = w.faces()[interior[k]];
    ++s.interior_by_codim[f.codim()];
    if (!ok[k]) s.link_failures.push_back(f.str());
    if (f.dim() == 0) {
      ++s.interior_vertices;
      if (w.up()[interior[k]].size() != static_cast<std::size_t>(n + 1)) s.degree_failures.push_back(f.str());
    }
  }
  return s;
}

namespace {

/// Whether `sub` is obtained from `full` by deleting entries, keeping the cyclic order.
bool cyclic_subsequence(const CyclicSet& full, const CyclicSet& sub) {
  std::vector<std::size_t> pos;
  for (const auto& p : sub) {
    auto it = std::find(full.begin(), full.end(), p);
    if (it == full.end()) return false;
    pos.push_back(static_cast<std::size_t>(it - full.begin()));
  }
  std::size_t descents = 0;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (pos[(k + 1) % pos.size()] <= pos[k]) ++descents;
  }
  return descents <= 1;
}

}  // namespace

CyclicSummary cyclic_sweep(int n, int radius) {
  CyclicSummary s;
  s.n = n;
  s.radius = radius;
  const FacePoset& w = cached_window(LatticeVector::zero(n), radius);
  const auto gens = WeylElement::generators(n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const HoneycombFace& f = w.faces()[i];
    const CyclicSet order = cyclic_order_at(f);
    for (const auto& g : gens) {
      CyclicSet moved = order;
      for (auto& p : moved) p = g.apply(p);
      ++s.action_checks;
      if (!cyclic_equal(cyclic_order_at(act(g, f)), moved)) s.failures.push_back("action at " + f.str());
    }
    for (std::size_t j : w.up()[i]) {
      ++s.cover_checks;
      if (!cyclic_subsequence(order, cyclic_order_at(w.faces()[j]))) {
        s.failures.push_back("cover " + f.str() + " -> " + w.faces()[j].str());
      }
    }
  }
  return s;
}

CorepSummary corepresentability_sweep(int n, int radius, int family_radius) {
  CorepSummary s;
  s.n = n;
  s.radius = radius;
  const LatticeVector origin = LatticeVector::zero(n);
  struct Key {
    HoneycombFace facet;
    LatticeVector side;
    RankOneBrane target;
  };
  std::vector<Key> keys;
  std::vector<RankOneBrane> family;
  for (const auto& P : lattice_ball(origin, family_radius)) {
    for (Subset J = 0; J < full_subset(n); ++J) {
      for (int p = 0; p < 2; ++p) family.push_back(brane(P, J, p));
    }
  }
  for (const auto& side : lattice_ball(origin, radius - 1)) {
    for (Subset I = 1; I < full_subset(n); ++I) {
      if (subset_size(I) != 1 && subset_size(I) != n) continue;
      const HoneycombFace F = facet_for_subset(I, side);
      for (const auto& G : family) keys.push_back(Key{F, side, G});
    }
  }
  s.cases = parallel_map<CorepCase>(keys.size(), [&](std::size_t k) {
    const Key& key = keys[k];
    const RankOneBrane src = skyscraper(key.facet, key.side);
    CorepCase c{src.describe(), key.facet.str(), key.side, key.target.describe(), {}, {}, std::nullopt, false};
    c.expected = stalk(key.target, key.facet, key.side);
    c.poset = global_hom(src, key.target, origin, radius).dims;
    try {
      c.quiver = global_hom(src, key.target, origin, radius, HomMethod::RegionQuiver).dims;
    } catch (const MethodNotApplicable&) {
    }
    c.match = c.poset == c.expected && (!c.quiver || *c.quiver == c.expected);
    return c;
  });
  for (const auto& c : s.cases) {
    if (!(c.poset == c.expected)) ++s.mismatches;
    if (c.quiver) {
      ++s.quiver_cases;
      if (!(*c.quiver == c.expected)) ++s.quiver_mismatches;
    }
  }
  return s;
}

EngineSummary engine_sweep(int n, int twist_radius, int degree_cap) {
  EngineSummary s;
  s.n = n;
  s.twist_radius = twist_radius;
  std::vector<EngineCell> keys;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      for (const auto& w : lattice_ball(LatticeVector::zero(n), twist_radius)) keys.push_back(EngineCell{a, b, w, {}, {}});
    }
  }
  s.cells = parallel_map<EngineCell>(keys.size(), [&](std::size_t k) {
    EngineCell c = keys[k];
    const EquivariantMF M = structure_mf(n, c.a);
    const EquivariantMF N = structure_mf(n, c.b);
    c.monomial = hom_cohomology(M, N, c.weight, HomEngine::Monomial);
    c.truncation = hom_cohomology(M, N, c.weight, HomEngine::Truncation, degree_cap);
    return c;
  });
  s.engines_agree = true;
  s.dims_binary = true;
  for (const auto& c : s.cells) {
    s.engines_agree = s.engines_agree && c.monomial == c.truncation;
    s.dims_binary = s.dims_binary && c.truncation.even <= 1 && c.truncation.odd <= 1;
  }
  s.identity_classes = true;
  s.f_classes = true;
  for (int a = 0; a <= n; ++a) {
    const EquivariantMF M = structure_mf(n, a);
    const MFMorphism id = identity(M);
    s.identity_classes = s.identity_classes && is_closed(id) && !is_boundary_class(id) &&
                         hom_cohomology(M, M, HomEngine::Truncation, degree_cap) == HomDims{1, 0};
    for (int b = 0; b <= n; ++b) {
      if (a == b) continue;
      const MFMorphism f = f_map(n, a, b);
      validate_morphism(f);
      s.f_classes = s.f_classes && is_closed(f) && !is_boundary_class(f) &&
                    hom_cohomology(f.source, f.target, HomEngine::Truncation, degree_cap) == HomDims{0, 1};
    }
  }
  return s;
}

}  // namespace hm
