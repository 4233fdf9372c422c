#include "doctest.h"
#include "honeymirror/branes.hpp"
#include "honeymirror/sweeps.hpp"

using namespace hm;

TEST_CASE("membership in P + N<J>") {
  const auto s = PermutohedronSet::shape(LatticeVector::zero(2), 0b011);
  CHECK(s.contains(LatticeVector::zero(2)));
  CHECK(s.contains(LatticeVector({2, 1, 0})));
  CHECK_FALSE(s.contains(LatticeVector::basis(2, 2)));
  CHECK_THROWS(PermutohedronSet::shape(LatticeVector::zero(2), 0b111));
}

TEST_CASE("skyscraper stalks") {
  const int n = 2;
  const LatticeVector o = LatticeVector::zero(n);
  for (int a = 0; a <= n; ++a) {
    const RankOneBrane d = skyscraper_at(o, a);
    for (Subset I = 1; I < full_subset(n); ++I) {
      const HoneycombFace F = facet_for_subset(I, o);
      const StalkDims s = stalk(d, F, o);
      CHECK(s.total() == (subset_contains(I, a) ? 1 : 0));
    }
  }
}

TEST_CASE("far-side skyscraper is a shift") {
  const LatticeVector o = LatticeVector::zero(2);
  const HoneycombFace F = facet_for_subset(0b001, o);
  const RankOneBrane near = skyscraper(F, o);
  const RankOneBrane far = skyscraper(F, LatticeVector::basis(2, 0));
  CHECK(far.cells() == near.cells());
  CHECK(far.parity() != near.parity());
}

TEST_CASE("Weyl action on skyscrapers") {
  const int n = 3;
  const LatticeVector o = LatticeVector::zero(n);
  const WeylElement s = WeylElement::transposition(n, 1, 2);
  CHECK(weyl_act_brane(s, skyscraper_at(o, 1)).cells() == skyscraper_at(o, 2).cells());
  const WeylElement t = WeylElement::translation(LatticeVector::basis(n, 0));
  CHECK(weyl_act_brane(t, skyscraper_at(o, 3)).cells() == skyscraper_at(LatticeVector::basis(n, 0), 3).cells());
}

TEST_CASE("rank-one condition fails at a vertex for n = 3") {
  const int n = 3;
  const FacePoset& w = cached_window(LatticeVector::zero(n), 2);
  const auto bad = build_rank_one(PermutohedronSet::finite({LatticeVector::zero(n), LatticeVector::lambda(n, 0b0011)}), w);
  REQUIRE(std::holds_alternative<BraneFailure>(bad));
  CHECK(std::get<BraneFailure>(bad).witness.dim() < 2);
  const auto good = build_rank_one(PermutohedronSet::finite({LatticeVector::zero(n), LatticeVector::basis(n, 0)}), w);
  CHECK(std::holds_alternative<RankOneBrane>(good));
}

TEST_CASE("any two cells give a rank-one brane for n = 2") {
  const int n = 2;
  const FacePoset& w = cached_window(LatticeVector::zero(n), 3);
  for (const auto& p : lattice_ball(LatticeVector::zero(n), 1)) {
    if (p.is_zero()) continue;
    CHECK(std::holds_alternative<RankOneBrane>(build_rank_one(PermutohedronSet::finite({LatticeVector::zero(n), p}), w)));
  }
}

TEST_CASE("skyscrapers corepresent stalks, both methods, n = 2") {
  const CorepSummary s = corepresentability_sweep(2, 2, 1);
  CHECK(s.mismatches == 0);
  CHECK(s.quiver_mismatches == 0);
  CHECK(s.quiver_cases > 0);
}

TEST_CASE("endomorphisms of the boundary of one permutohedron") {
  // Two independent methods must agree; the B-side cross-check lives in the mirror tests.
  for (int n = 2; n <= 3; ++n) {
    const LatticeVector o = LatticeVector::zero(n);
    const RankOneBrane b = brane(o, 0);
    const StalkDims d = global_hom(b, b, o, 2).dims;
    CHECK(d.total() == 2);
  }
}

TEST_CASE("region quiver rejects shifted sources") {
  const LatticeVector o = LatticeVector::zero(2);
  const RankOneBrane d = skyscraper_at(o, 0).shifted();
  CHECK_THROWS_AS(global_hom(d, d, o, 2, HomMethod::RegionQuiver), MethodNotApplicable);
  CHECK(global_hom(d, d, o, 2).dims == StalkDims{1, 0});
}

TEST_CASE("cone of x_i is the brane with one direction fewer") {
  const int n = 2;
  const FacePoset& w = cached_window(LatticeVector::zero(n), 2);
  for (Subset J = 1; J < full_subset(n); ++J) {
    for (int i : subset_elements(J)) {
      CHECK(cone_check(i, LatticeVector::zero(n), J, w));
      for (int k : subset_elements(J)) CHECK(commuting_square_check(i, k, LatticeVector::zero(n), J, w));
    }
  }
}

TEST_CASE("x_i generates Hom from the twisted skyscraper") {
  for (int n = 2; n <= 3; ++n) {
    const LatticeVector o = LatticeVector::zero(n);
    for (int i = 0; i <= n; ++i) {
      const int j = (i + 1) % (n + 1);
      const RankOneBrane d = skyscraper_at(o, j);
      CHECK(global_hom(d.twisted(LatticeVector::basis(n, i)), d, o, 2).dims == StalkDims{1, 0});
    }
  }
}
