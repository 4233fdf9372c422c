#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "honeymirror/mf.hpp"

using namespace hm;

namespace {

Exponent exps(std::initializer_list<int> e) { return Exponent(e); }

}  // namespace

TEST_CASE("structure factorization of z_a") {
  const EquivariantMF m = structure_mf(2, 0);
  m.validate();
  CHECK(m.ranks() == std::make_pair<std::size_t, std::size_t>(1, 1));
  CHECK(m.d0()[0][0] == Poly::monomial(exps({0, 1, 1})));
  CHECK(m.d1()[0][0] == Poly::monomial(exps({1, 0, 0})));
  CHECK(poly_mul(m.d1(), m.d0())[0][0] == superpotential(2));
  CHECK(m.weights()[1] == LatticeVector::basis(2, 0));
  CHECK_THROWS(structure_mf(2, 3));
}

TEST_CASE("twist shifts every weight") {
  const LatticeVector l({0, 2, 1});
  const EquivariantMF m = twist(structure_mf(2, 1), l);
  m.validate();
  CHECK(m.weights()[0] == l);
  CHECK(m.weights()[1] == l + LatticeVector::basis(2, 1));
}

TEST_CASE("validation catches a broken differential") {
  PolyMatrix d = structure_mf(2, 0).d();
  d[0][1] = d[0][1] * Rational(2);
  const EquivariantMF bad(2, {0, 1}, structure_mf(2, 0).weights(), d);
  CHECK_THROWS(bad.validate());
}

TEST_CASE("Koszul factorizations are valid") {
  for (int n = 1; n <= 3; ++n) {
    for (Subset I = 0; I < full_subset(n); ++I) koszul_mf(n, I).validate();
  }
  CHECK_THROWS(koszul_mf(2, full_subset(2)));
}

TEST_CASE("f maps") {
  const MFMorphism f = f_map(2, 0, 1);
  validate_morphism(f);
  CHECK(f.parity == 1);
  CHECK(is_closed(f));
  CHECK(f.m[1][0] == Poly::monomial(exps({0, 0, 1}), -1));
  CHECK_FALSE(is_boundary_class(f));
  CHECK(hom_cohomology(f.source, f.target, HomEngine::Truncation) == HomDims{0, 1});
  CHECK_THROWS(f_map(2, 1, 1));
}

TEST_CASE("cones") {
  const MFMorphism f = f_map(2, 0, 1);
  const EquivariantMF c = cone(f);
  c.validate();
  CHECK(c.ranks() == std::make_pair<std::size_t, std::size_t>(2, 2));
  const EquivariantMF M = structure_mf(2, 0), N = structure_mf(2, 1);
  const EquivariantMF z = cone(zero_morphism(M, N, 0));
  const EquivariantMF sum = direct_sum(shift(M), N);
  CHECK(z.parity() == sum.parity());
  CHECK(z.d() == sum.d());
  MFMorphism broken = f;
  broken.m[0][1] = Poly::constant(2, 2);
  CHECK_THROWS(cone(broken));
}

TEST_CASE("identity is a nonzero class") {
  const EquivariantMF m = structure_mf(2, 0);
  CHECK(hom_cohomology(m, m, HomEngine::Monomial) == HomDims{1, 0});
  CHECK(hom_cohomology(m, m, HomEngine::Truncation) == HomDims{1, 0});
  CHECK_FALSE(is_boundary_class(identity(m)));
  const SearchResult r = nullhomotopy_search(identity(m), 16);
  CHECK_FALSE(r.certificate);
  CHECK(r.last_degree == 16);
}

TEST_CASE("a weight with no admissible monomial gives zero") {
  const LatticeVector w = LatticeVector::basis(2, 0) * 2;
  CHECK(hom_cohomology(structure_mf(2, 0), structure_mf(2, 1), w, HomEngine::Monomial) == HomDims{0, 0});
  CHECK(hom_cohomology(structure_mf(2, 0), structure_mf(2, 1), w, HomEngine::Truncation) == HomDims{0, 0});
}

TEST_CASE("engines agree and shifts swap parity") {
  const int n = 2;
  for (const auto& w : lattice_ball(LatticeVector::zero(n), 2)) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        const EquivariantMF M = shift(structure_mf(n, a));
        const EquivariantMF N = structure_mf(n, b);
        const HomDims x = hom_cohomology(M, N, w, HomEngine::Monomial);
        CHECK(x == hom_cohomology(M, N, w, HomEngine::Truncation));
        const HomDims y = hom_cohomology(structure_mf(n, a), N, w);
        CHECK(x.even == y.odd);
        CHECK(x.odd == y.even);
      }
    }
  }
}

TEST_CASE("Hom is invariant under permutations of variables") {
  const int n = 3;
  const WeylElement g = WeylElement::permutation({2, 0, 3, 1});
  for (const auto& w : lattice_ball(LatticeVector::zero(n), 1)) {
    for (int a = 0; a <= n; ++a) {
      const EquivariantMF M = act(g, structure_mf(n, a));
      const EquivariantMF N = act(g, twist(koszul_mf(n, 0b0001), w));
      CHECK(hom_cohomology(M, N, HomEngine::Truncation) ==
            hom_cohomology(structure_mf(n, a), twist(koszul_mf(n, 0b0001), w), HomEngine::Truncation));
    }
  }
}

TEST_CASE("Koszul factorization on one variable is a shifted structure factorization") {
  const int n = 2;
  for (int a = 0; a <= n; ++a) {
    const EquivariantMF k = shift(twist(koszul_mf(n, full_subset(n) & ~(Subset(1) << a)), LatticeVector::basis(n, a)));
    const EquivariantMF o = structure_mf(n, a);
    CHECK(hom_cohomology(k, o, HomEngine::Truncation) == HomDims{1, 0});
    CHECK(hom_cohomology(o, k, HomEngine::Truncation) == HomDims{1, 0});
  }
}

TEST_CASE("nullhomotopy certificates are verified") {
  const MFMorphism g = compose(twist(f_map(2, 1, 2), LatticeVector::basis(2, 0)), f_map(2, 0, 1));
  const SearchResult r = nullhomotopy_search(g);
  REQUIRE(r.certificate);
  CHECK(verify_certificate(g, *r.certificate));
  HomotopyCertificate bad = *r.certificate;
  bad.h.m[0][0] = bad.h.m[0][0] + Poly::constant(2, 1);
  CHECK_FALSE(verify_certificate(g, bad));
}

TEST_CASE("acyclicity for every ordering, n = 2") {
  std::vector<int> order{0, 1, 2};
  do {
    const AcyclicityReport r = check_acyclicity(2, order);
    CHECK(r.compositions_null);
    CHECK(r.contractible);
    CHECK_FALSE(r.inconclusive);
    const EquivariantMF t = acyclic_totalization(2, order);
    CHECK(t.size() == 6);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("a single structure factorization is not contractible") {
  CHECK_FALSE(is_contractible(structure_mf(3, 2), 20).certificate);
}
