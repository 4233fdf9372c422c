#include "doctest.h"
#include "honeymirror/linalg.hpp"

using namespace hm;

namespace {

SparseMatrix dense(const std::vector<std::vector<long>>& rows) {
  SparseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.add(r, c, rows[r][c]);
  }
  return m;
}

std::vector<Rational> times(const SparseMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) y[r] += v * x[c];
  }
  return y;
}

}  // namespace

TEST_CASE("entries cancel to zero and are not stored") {
  SparseMatrix m(2, 2);
  m.add(0, 1, Rational(1, 3));
  m.add(0, 1, Rational(-1, 3));
  CHECK(m.nonzeros() == 0);
  CHECK(m.get(0, 1) == 0);
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
  CHECK(rank(dense({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(dense({{2, 1}, {1, 1}})) == 2);
}

TEST_CASE("solve returns an exact solution or nothing") {
  const SparseMatrix m = dense({{1, 2, 0}, {0, 1, 1}, {1, 3, 1}});
  const std::vector<Rational> b{Rational(1), Rational(1, 2), Rational(3, 2)};
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(times(m, *x) == b);
  CHECK_FALSE(solve(m, {Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("kernel vectors are annihilated and span the nullity") {
  const SparseMatrix m = dense({{1, 1, 0, 2}, {0, 0, 1, 1}});
  const auto ker = kernel(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(times(m, v) == std::vector<Rational>(2));
}

TEST_CASE("cohomology of a three-term complex") {
  // k --(1,1)--> k^2 --(1,-1)--> k is exact
  const SparseMatrix in = dense({{1}, {1}});
  const SparseMatrix out = dense({{1, -1}});
  CHECK(cohomology_dim(2, in, out) == 0);
  CHECK(cohomology_dim(2, dense({{0}, {0}}), out) == 1);
  CHECK_THROWS(cohomology_dim(1, dense({{1}}), dense({{1}})));
}

TEST_CASE("rationals print as p/q") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
}
