#include "doctest.h"
#include "honeymirror/mirror.hpp"

using namespace hm;

TEST_CASE("verdicts combine") {
  CHECK(combine(Verdict::Match, Verdict::Match) == Verdict::Match);
  CHECK(combine(Verdict::Match, Verdict::Mismatch) == Verdict::Mismatch);
  CHECK(combine(Verdict::Mismatch, Verdict::Inconclusive) == Verdict::Inconclusive);
  CHECK(to_string(Verdict::Match) == "match");
}

TEST_CASE("parallel map keeps order and forwards exceptions") {
  const auto v = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(parallel_map<int>(10,
                                    [](std::size_t i) -> int {
                                      if (i == 7) throw std::runtime_error("boom");
                                      return 0;
                                    }),
                  std::runtime_error);
}

TEST_CASE("generator dictionary, n = 2") {
  const MirrorReport r = check_generators(2, 2);
  CHECK(r.verdict == Verdict::Match);
  CHECK(r.equivariance.size() == 4);
  int identity_cells = 0, f_cells = 0;
  for (const auto& c : r.cells) {
    CHECK(c.match);
    if (c.a == c.b && c.weight.is_zero()) {
      CHECK(c.aside == StalkDims{1, 0});
      ++identity_cells;
    }
    if (c.a != c.b && c.weight == LatticeVector::basis(2, c.a)) {
      CHECK(c.bside == HomDims{0, 1});
      ++f_cells;
    }
  }
  CHECK(identity_cells == 3);
  CHECK(f_cells == 6);
}

TEST_CASE("the opposite twist reading disagrees somewhere") {
  const MirrorReport r = check_generators(2, 2, 2, false);
  bool differs = false;
  for (const auto& c : r.cells) differs = differs || !(c.bside == c.bside_alt);
  CHECK(differs);
}

TEST_CASE("boundary of a permutohedron matches the full Koszul factorization") {
  // End(B_{P,empty}) from the A-side engine, cross-checked against the B-side.
  for (int n = 2; n <= 3; ++n) {
    const LatticeVector o = LatticeVector::zero(n);
    const StalkDims a = global_hom(brane(o, 0), brane(o, 0), o, 2).dims;
    const EquivariantMF k = brane_mirror(n, o, 0);
    const HomDims b = hom_cohomology(k, k, HomEngine::Truncation);
    CHECK(a.even == b.even);
    CHECK(a.odd == b.odd);
  }
  CHECK(hom_cohomology(brane_mirror(2, LatticeVector::zero(2), 0), brane_mirror(2, LatticeVector::zero(2), 0)) ==
        HomDims{1, 1});
  CHECK(hom_cohomology(brane_mirror(3, LatticeVector::zero(3), 0), brane_mirror(3, LatticeVector::zero(3), 0)) ==
        HomDims{2, 0});
}

TEST_CASE("relations, n = 2") {
  const RelationsReport r = check_relations(2, 2, 1);
  CHECK(r.acyclicity.size() == 6);
  CHECK(r.acyclicity_verdict == Verdict::Match);
  CHECK(r.cone_verdict == Verdict::Match);
  CHECK(r.koszul_verdict == Verdict::Match);
  CHECK(r.verdict == Verdict::Match);
}

TEST_CASE("mirror of a skyscraper brane is the structure factorization") {
  const int n = 2;
  const LatticeVector o = LatticeVector::zero(n);
  for (int a = 0; a <= n; ++a) {
    const EquivariantMF m = brane_mirror(n, o, full_subset(n) & ~(Subset(1) << a));
    CHECK(hom_cohomology(m, structure_mf(n, a), HomEngine::Truncation) == HomDims{1, 0});
  }
}
