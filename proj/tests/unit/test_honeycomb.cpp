#include <cmath>

#include "doctest.h"
#include "honeymirror/honeycomb.hpp"
#include "honeymirror/sweeps.hpp"
#include "hull_oracle.hpp"

using namespace hm;

namespace {

long long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST_CASE("face counts are ordered set partitions") {
  for (int n = 1; n <= 4; ++n) {
    const PermutohedronCensus c = build_permutohedron(n);
    REQUIRE(c.counts_by_dim.size() == static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
      const int blocks = n + 1 - d;
      CHECK(c.counts_by_dim[d] == factorial(blocks) * stirling2(n + 1, blocks));
    }
  }
}

TEST_CASE("hexagons and squares of the three-dimensional permutohedron") {
  const PermutohedronCensus c = build_permutohedron(3);
  CHECK(c.counts_by_dim == std::vector<long long>{24, 36, 14});
  CHECK(c.types.at({1, 3}) == 8);
  CHECK(c.types.at({2, 2}) == 6);
}

TEST_CASE("census agrees with the Voronoi hull for n = 2") {
  const oracle::Hull hull = oracle::voronoi_cell(2);
  CHECK(hull.vertices.size() == 6);
  CHECK(hull.faces.size() == build_permutohedron(2).faces.size());
}

TEST_CASE("faces round-trip through their incident cycle") {
  for (const auto& f : build_permutohedron(3).faces) {
    CHECK(HoneycombFace::from_cycle(f.incident()) == f);
    CHECK(f.position_of(LatticeVector::zero(3)) >= 0);
  }
}

TEST_CASE("vertex positions are equidistant from incident cells") {
  for (const auto& f : build_permutohedron(3).faces) {
    if (f.dim() != 0) continue;
    const RationalPoint x = vertex_position(f);
    const Rational d0 = squared_distance(x, realize(f.incident()[0]));
    for (const auto& p : f.incident()) CHECK(squared_distance(x, realize(p)) == d0);
    const auto e = embed_orthonormal(x);
    double sq = 0;
    for (double c : e) sq += c * c;
    CHECK(std::fabs(sq - squared_norm(x).get_d()) < 1e-12);
  }
}

TEST_CASE("windows are closed under cofaces") {
  const FacePoset& w = FacePoset::window(2, 2);
  for (const auto& f : w.faces()) {
    for (const auto& g : cofaces(f)) CHECK(w.contains(g));
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j : w.up()[i]) CHECK(w.faces()[j].dim() == w.faces()[i].dim() + 1);
  }
}

TEST_CASE("skeleton posets") {
  CHECK(skeleton_poset(3).size == 10);
  CHECK(posets_isomorphic(skeleton_poset(3), skeleton_poset(3)));
  CHECK_FALSE(posets_isomorphic(skeleton_poset(3), skeleton_poset(2)));
}

TEST_CASE("interior links are arboreal for n = 2") {
  const ArborealSummary s = arboreal_sweep(2, 2);
  CHECK(s.pass());
  CHECK(s.interior_vertices > 0);
}

TEST_CASE("cyclic orders are equivariant and restrict along covers") {
  const CyclicSummary s = cyclic_sweep(2, 2);
  CHECK(s.pass());
  CHECK(s.cover_checks > 0);
}
