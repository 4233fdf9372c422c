#include "honeymirror/localcat.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hm {

std::string IntervalObject::str() const {
  return "s_{" + std::to_string(i) + "," + std::to_string(j) + "}" + (parity ? "[1]" : "") + "/" +
         std::to_string(size);
}

IntervalObject interval(int size, int i, int j, int parity) {
  if (size < 2) throw std::invalid_argument("interval: cyclic set needs at least two elements");
  if (i < 0 || i >= size || j < 0 || j >= size) throw std::invalid_argument("interval: index out of range");
  IntervalObject a{size, i, j, parity & 1};
  if (a.length() >= size) throw std::invalid_argument("interval: interval covers the whole cyclic set");
  return a;
}

std::vector<IntervalObject> all_intervals(int size) {
  std::vector<IntervalObject> out;
  for (int i = 0; i < size; ++i) {
    for (int len = 1; len < size; ++len) {
      for (int p = 0; p < 2; ++p) out.push_back(interval(size, i, (i + len - 1) % size, p));
    }
  }
  return out;
}

IntervalModule linearize(const IntervalObject& a, int cut) {
  const int size = a.size;
  auto pos = [&](int x) { return ((x - cut) % size + size) % size; };
  IntervalModule m;
  m.r = size - 1;
  if (!a.contains(cut)) {
    m.lo = pos(a.i);
    m.hi = pos(a.j);
    m.parity = a.parity;
  } else {
    m.lo = pos((a.j + 1) % size);
    m.hi = pos((a.i - 1 + size) % size);
    m.parity = a.parity ^ 1;
  }
  return m;
}

namespace {

void check_same_size(const IntervalObject& a, const IntervalObject& b) {
  if (a.size != b.size) throw std::invalid_argument("local category: objects over different cyclic sets");
}

bool module_hom(const IntervalModule& x, const IntervalModule& y) {
  return y.lo <= x.lo && x.lo <= y.hi && y.hi <= x.hi;
}

bool module_ext1(const IntervalModule& x, const IntervalModule& y) {
  return x.hi < x.r && x.lo + 1 <= y.lo && y.lo <= x.hi + 1 && x.hi + 1 <= y.hi;
}

}  // namespace

LocalHomSpace hom_intervals(const IntervalObject& a, const IntervalObject& b) {
  check_same_size(a, b);
  const IntervalModule x = linearize(a, 0);
  const IntervalModule y = linearize(b, 0);
  LocalHomSpace h;
  const int shift = (y.parity - x.parity) & 1;
  if (module_hom(x, y)) (shift ? h.odd : h.even) += 1;
  if (module_ext1(x, y)) (shift ? h.even : h.odd) += 1;
  return h;
}

std::optional<IntervalObject> restrict(int k, const IntervalObject& a) {
  const int size = a.size;
  if (k < 0 || k >= size) throw std::invalid_argument("restrict: element out of range");
  if (size < 2) throw std::invalid_argument("restrict: removal would leave an empty cyclic set");
  if (a.i == k && a.j == k) return std::nullopt;
  int i = a.i, j = a.j;
  if (i == k) i = (i + 1) % size;
  if (j == k) j = (j - 1 + size) % size;
  auto relabel = [&](int x) { return x > k ? x - 1 : x; };
  IntervalObject out{size - 1, relabel(i), relabel(j), a.parity};
  if (out.size < 2 || out.length() >= out.size) return std::nullopt;
  return out;
}

namespace {

std::mutex cache_mutex;
std::map<std::tuple<IntervalObject, IntervalObject, IntervalObject, int, int>, bool> compose_cache;

}  // namespace

bool compose_nonzero(const IntervalObject& a, const IntervalObject& b, const IntervalObject& c, int e1, int e2) {
  check_same_size(a, b);
  check_same_size(b, c);
  e1 &= 1;
  e2 &= 1;
  if (hom_intervals(a, b).at(e1) == 0 || hom_intervals(b, c).at(e2) == 0) return false;
  const auto key = std::make_tuple(a, b, c, e1, e2);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = compose_cache.find(key);
    if (it != compose_cache.end()) return it->second;
  }
  const auto ca = model::module_complex(linearize(a, 0));
  const auto cb = model::module_complex(linearize(b, 0));
  const auto cc = model::module_complex(linearize(c, 0));
  const auto f = model::hom_basis(ca, cb, e1);
  const auto g = model::hom_basis(cb, cc, e2);
  if (f.size() != 1 || g.size() != 1) throw std::logic_error("compose_nonzero: model disagrees with Hom dimensions");
  const bool nonzero = !model::is_boundary(ca, cc, model::compose(g[0], f[0]));
  std::lock_guard<std::mutex> lock(cache_mutex);
  compose_cache.emplace(key, nonzero);
  return nonzero;
}

bool restrict_hom(int k, const IntervalObject& a, const IntervalObject& b, int parity) {
  check_same_size(a, b);
  parity &= 1;
  if (hom_intervals(a, b).at(parity) == 0) throw std::invalid_argument("restrict_hom: no basis morphism in this parity");
  if (!restrict(k, a) || !restrict(k, b)) return false;
  for (int p = 0; p < 2; ++p) {
    const IntervalObject s = simple_object(a.size, k, p);
    for (int e1 = 0; e1 < 2; ++e1) {
      if (compose_nonzero(a, s, b, e1, parity - e1)) return false;
    }
  }
  return true;
}

IntervalObject corestrict_object(int position, const IntervalObject& a) {
  const int size = a.size + 1;
  if (position < 0 || position >= size) throw std::invalid_argument("corestrict_object: position out of range");
  std::optional<IntervalObject> found;
  for (const auto& cand : all_intervals(size)) {
    const auto r = restrict(position, cand);
    if (!r || !(*r == a)) continue;
    if (hom_intervals(cand, simple_object(size, position, 0)).total() != 0) continue;
    if (found) throw std::logic_error("corestrict_object: left adjoint is not unique");
    found = cand;
  }
  if (!found) throw std::logic_error("corestrict_object: no left adjoint found");
  return *found;
}

namespace model {

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, std::vector<Rational>(cols, Rational(0))); }

Complex module_complex(const IntervalModule& mod) {
  if (mod.lo < 1 || mod.hi > mod.r || mod.lo > mod.hi) throw std::invalid_argument("module_complex: bad interval module");
  Complex c;
  c.r = mod.r;
  c.summands.push_back({mod.lo, mod.parity & 1});
  if (mod.hi < mod.r) c.summands.push_back({mod.hi + 1, (mod.parity + 1) & 1});
  c.d = zero_matrix(c.summands.size(), c.summands.size());
  if (c.summands.size() == 2) c.d[0][1] = 1;
  return c;
}

Complex shifted(const Complex& c) {
  Complex out = c;
  for (auto& s : out.summands) s.parity ^= 1;
  for (auto& row : out.d) {
    for (auto& x : row) x = -x;
  }
  return out;
}

Complex twisted_sum(const std::vector<Complex>& parts, const std::vector<std::vector<Matrix>>& twist) {
  Complex out;
  std::vector<std::size_t> offset;
  for (const auto& p : parts) {
    out.r = p.r;
    offset.push_back(out.summands.size());
    out.summands.insert(out.summands.end(), p.summands.begin(), p.summands.end());
  }
  out.d = zero_matrix(out.summands.size(), out.summands.size());
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = 0; b < parts.size(); ++b) {
      const Matrix& blk = a == b ? parts[a].d : twist.at(a).at(b);
      if (blk.empty()) continue;
      for (std::size_t t = 0; t < blk.size(); ++t) {
        for (std::size_t s = 0; s < blk[t].size(); ++s) out.d[offset[b] + t][offset[a] + s] = blk[t][s];
      }
    }
  }
  return out;
}

bool allowed(const Summand& source, const Summand& target, int parity) {
  return target.vertex <= source.vertex && ((source.parity + parity) & 1) == target.parity;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix out = zero_matrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b, const Rational& scale) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += scale * b[i][j];
  }
  return out;
}

bool is_zero(const Matrix& a) {
  for (const auto& row : a) {
    for (const auto& x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

void check_complex(const Complex& c) {
  const std::size_t n = c.summands.size();
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) {
      if (c.d[t][s] != 0 && !allowed(c.summands[s], c.summands[t], 1)) {
        throw std::logic_error("model complex: differential entry violates the quiver structure");
      }
    }
  }
  if (!is_zero(multiply(c.d, c.d))) throw std::logic_error("model complex: differential does not square to zero");
}

Matrix hom_differential(const Complex& source, const Complex& target, const Morphism& f) {
  const Rational sign = (f.parity & 1) ? -1 : 1;
  return add(multiply(target.d, f.m), multiply(f.m, source.d), -sign);
}

Morphism compose(const Morphism& g, const Morphism& f) { return Morphism{(g.parity + f.parity) & 1, multiply(g.m, f.m)}; }

namespace {

struct HomBasis {
  std::vector<std::pair<std::size_t, std::size_t>> entries;  // (target, source)
};

HomBasis hom_space(const Complex& source, const Complex& target, int parity) {
  HomBasis b;
  for (std::size_t t = 0; t < target.summands.size(); ++t) {
    for (std::size_t s = 0; s < source.summands.size(); ++s) {
      if (allowed(source.summands[s], target.summands[t], parity)) b.entries.emplace_back(t, s);
    }
  }
  return b;
}

Morphism from_vector(const Complex& source, const Complex& target, int parity, const HomBasis& basis,
                     const std::vector<Rational>& v) {
  Morphism f{parity & 1, zero_matrix(target.summands.size(), source.summands.size())};
  for (std::size_t k = 0; k < basis.entries.size(); ++k) f.m[basis.entries[k].first][basis.entries[k].second] = v[k];
  return f;
}

std::vector<Rational> to_vector(const HomBasis& basis, const Matrix& m) {
  std::vector<Rational> v;
  for (const auto& [t, s] : basis.entries) v.push_back(m[t][s]);
  return v;
}

// Matrix of the Hom differential from parity e to parity e+1.
SparseMatrix differential_matrix(const Complex& source, const Complex& target, int parity) {
  const HomBasis from = hom_space(source, target, parity);
  const HomBasis to = hom_space(source, target, parity + 1);
  SparseMatrix m(to.entries.size(), from.entries.size());
  for (std::size_t k = 0; k < from.entries.size(); ++k) {
    std::vector<Rational> unit(from.entries.size(), Rational(0));
    unit[k] = 1;
    const Matrix img = hom_differential(source, target, from_vector(source, target, parity, from, unit));
    const auto col = to_vector(to, img);
    for (std::size_t r = 0; r < col.size(); ++r) m.add(r, k, col[r]);
  }
  return m;
}

}  // namespace

int hom_dim(const Complex& source, const Complex& target, int parity) {
  const std::size_t dim = hom_space(source, target, parity).entries.size();
  return static_cast<int>(cohomology_dim(dim, differential_matrix(source, target, parity + 1),
                                         differential_matrix(source, target, parity)));
}

std::vector<Morphism> hom_basis(const Complex& source, const Complex& target, int parity) {
  const HomBasis space = hom_space(source, target, parity);
  const SparseMatrix into = differential_matrix(source, target, parity + 1);
  const SparseMatrix out = differential_matrix(source, target, parity);
  // Span of boundaries, extended greedily by cocycles.
  std::vector<std::vector<Rational>> span;
  for (std::size_t c = 0; c < into.cols(); ++c) {
    std::vector<Rational> col(into.rows(), Rational(0));
    for (std::size_t r = 0; r < into.rows(); ++r) col[r] = into.get(r, c);
    span.push_back(std::move(col));
  }
  auto span_rank = [&](const std::vector<std::vector<Rational>>& vs) {
    SparseMatrix m(vs.size(), space.entries.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = 0; j < vs[i].size(); ++j) m.add(i, j, vs[i][j]);
    }
    return rank(m);
  };
  std::size_t current = span_rank(span);
  std::vector<Morphism> basis;
  for (const auto& z : kernel(out)) {
    span.push_back(z);
    const std::size_t next = span_rank(span);
    if (next > current) {
      current = next;
      basis.push_back(from_vector(source, target, parity, space, z));
    } else {
      span.pop_back();
    }
  }
  return basis;
}

std::optional<Morphism> solve_boundary(const Complex& source, const Complex& target, const Morphism& g) {
  const int hp = (g.parity + 1) & 1;
  const SparseMatrix d = differential_matrix(source, target, hp);
  const HomBasis to = hom_space(source, target, g.parity);
  for (std::size_t t = 0; t < g.m.size(); ++t) {
    for (std::size_t s = 0; s < g.m[t].size(); ++s) {
      if (g.m[t][s] != 0 && !allowed(source.summands[s], target.summands[t], g.parity)) {
        throw std::invalid_argument("solve_boundary: morphism entry violates the quiver structure");
      }
    }
  }
  auto x = solve(d, to_vector(to, g.m));
  if (!x) return std::nullopt;
  return from_vector(source, target, hp, hom_space(source, target, hp), *x);
}

bool is_boundary(const Complex& source, const Complex& target, const Morphism& f) {
  return solve_boundary(source, target, f).has_value();
}

}  // namespace model

}  // namespace hm
