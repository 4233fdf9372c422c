#include "doctest.h"
#include "honeymirror/lattice.hpp"

using namespace hm;

TEST_CASE("lifts are canonicalized to minimum zero") {
  const LatticeVector v({3, 5, 4});
  CHECK(v.lift() == std::vector<long long>{0, 2, 1});
  CHECK(v.norm() == 2);
  CHECK(LatticeVector::lambda(2, full_subset(2)).is_zero());
  CHECK((LatticeVector::basis(3, 1) - LatticeVector::basis(3, 1)).is_zero());
}

TEST_CASE("lambda of a subset and its complement are inverse") {
  for (Subset I = 1; I < full_subset(3); ++I) {
    const auto a = LatticeVector::lambda(3, I);
    const auto b = LatticeVector::lambda(3, full_subset(3) & ~I);
    CHECK((a + b).is_zero());
    CHECK(a.norm() == 1);
  }
}

TEST_CASE("lattice ball sizes match a direct count of canonical lifts") {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 0; r <= 3; ++r) {
      // canonical lifts with max <= r: all of {0..r}^{n+1} minus those with no zero entry
      long long all = 1, positive = 1;
      for (int i = 0; i <= n; ++i) {
        all *= r + 1;
        positive *= r;
      }
      CHECK(static_cast<long long>(lattice_ball(LatticeVector::zero(n), r).size()) == all - positive);
    }
  }
}

TEST_CASE("squared norm of a basis vector") {
  for (int n = 1; n <= 4; ++n) CHECK(squared_norm(realize(LatticeVector::basis(n, 0))) == Rational(n, n + 1));
}

TEST_CASE("Weyl group law and inverses") {
  const int n = 3;
  const auto gens = WeylElement::generators(n);
  CHECK(gens.size() == 6);
  const LatticeVector v({0, 2, 1, 3});
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      CHECK((g * h).apply(v) == g.apply(h.apply(v)));
    }
    CHECK((g * g.inverse()) == WeylElement::identity(n));
    CHECK(g.inverse().apply(g.apply(v)) == v);
  }
  const WeylElement s = WeylElement::transposition(n, 0, 2);
  CHECK(s.apply(LatticeVector::basis(n, 0)) == LatticeVector::basis(n, 2));
  CHECK(s.apply(Subset(0b0011)) == Subset(0b0110));
}

TEST_CASE("Weyl action preserves distances") {
  const int n = 2;
  const LatticeVector a({0, 1, 2}), b({1, 0, 0});
  for (const auto& g : WeylElement::generators(n)) {
    CHECK(squared_distance(realize(g.apply(a)), realize(g.apply(b))) == squared_distance(realize(a), realize(b)));
  }
}
