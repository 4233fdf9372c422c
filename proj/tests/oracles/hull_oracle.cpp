#include "hull_oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace hm::oracle {

namespace {

using Row = std::vector<mpq_class>;

/// Reduces rows in place and returns the rank.
std::size_t row_reduce(std::vector<Row>& m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Unique solution of a square system given as augmented rows, if any.
std::optional<HullPoint> solve_unique(std::vector<Row> m) {
  const std::size_t n = m.size();
  if (row_reduce(m) < n) return std::nullopt;
  HullPoint x(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t c = 0;
    while (m[r][c] == 0) ++c;
    if (c == n) return std::nullopt;
    x[c] = m[r][n] / m[r][c];
  }
  return x;
}

mpq_class dot(const HullPoint& a, const HullPoint& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int affine_dim(const std::vector<HullPoint>& pts, const std::set<std::size_t>& idx) {
  if (idx.empty()) return -1;
  std::vector<Row> diffs;
  const HullPoint& base = pts[*idx.begin()];
  for (std::size_t i : idx) {
    Row r(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) r[k] = pts[i][k] - base[k];
    diffs.push_back(r);
  }
  return static_cast<int>(row_reduce(diffs));
}

}  // namespace

Hull voronoi_cell(int n) {
  const int d = n + 1;
  // Nonzero lattice vectors of word norm <= 2: lifts in {0,1,2}^d with a zero coordinate.
  std::vector<HullPoint> normals;
  std::vector<mpq_class> offsets;
  std::vector<int> raw(d, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == d) {
      if (*std::min_element(raw.begin(), raw.end()) != 0) return;
      if (*std::max_element(raw.begin(), raw.end()) == 0) return;
      mpq_class mean = 0;
      for (int x : raw) mean += x;
      mean /= d;
      HullPoint v(d);
      for (int i = 0; i < d; ++i) v[i] = mpq_class(raw[i]) - mean;
      offsets.push_back(dot(v, v) / 2);
      normals.push_back(std::move(v));
      return;
    }
    for (int x = 0; x <= 2; ++x) {
      raw[k] = x;
      rec(k + 1);
    }
  };
  rec(0);

  std::set<HullPoint> found;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == n) {
      std::vector<Row> m;
      for (std::size_t i : pick) {
        Row r(normals[i]);
        r.push_back(offsets[i]);
        m.push_back(r);
      }
      Row sum(d, 1);
      sum.push_back(0);
      m.push_back(sum);
      auto x = solve_unique(m);
      if (!x) return;
      for (std::size_t i = 0; i < normals.size(); ++i) {
        if (dot(normals[i], *x) > offsets[i]) return;
      }
      found.insert(*x);
      return;
    }
    for (std::size_t i = from; i < normals.size(); ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);

  Hull hull;
  hull.vertices.assign(found.begin(), found.end());
  std::set<std::set<std::size_t>> facets;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    std::set<std::size_t> tight;
    for (std::size_t v = 0; v < hull.vertices.size(); ++v) {
      if (dot(normals[i], hull.vertices[v]) == offsets[i]) tight.insert(v);
    }
    if (affine_dim(hull.vertices, tight) == n - 1) facets.insert(tight);
  }
  std::set<std::set<std::size_t>> faces(facets);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::set<std::size_t>> current(faces.begin(), faces.end());
    for (const auto& a : current) {
      for (const auto& b : facets) {
        std::set<std::size_t> c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(c, c.begin()));
        if (!c.empty() && faces.insert(c).second) grew = true;
      }
    }
  }
  for (const auto& f : faces) hull.faces.insert(HullFace{affine_dim(hull.vertices, f), f});
  return hull;
}

}  // namespace hm::oracle
