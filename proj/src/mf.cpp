#include "honeymirror/mf.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <deque>
#include <map>
#include <tuple>

namespace hm {

namespace {

int other(int p) { return 1 - p; }

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent e(a);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b[i];
  return e;
}

int min_coord(const Exponent& e) { return *std::min_element(e.begin(), e.end()); }

void check_square(const PolyMatrix& m, std::size_t size, const char* what) {
  if (m.size() != size) throw std::invalid_argument(std::string(what) + ": matrix shape mismatch");
  for (const auto& row : m) {
    if (row.size() != size) throw std::invalid_argument(std::string(what) + ": matrix shape mismatch");
  }
}

bool same_object(const EquivariantMF& a, const EquivariantMF& b) {
  return a.n() == b.n() && a.parity() == b.parity() && a.weights() == b.weights() && a.d() == b.d();
}

}  // namespace

EquivariantMF::EquivariantMF(int n, std::vector<int> parity, std::vector<LatticeVector> weight, PolyMatrix d)
    : n_(n), parity_(std::move(parity)), weight_(std::move(weight)), d_(std::move(d)) {
  if (weight_.size() != parity_.size()) throw std::invalid_argument("EquivariantMF: weight count mismatch");
  check_square(d_, parity_.size(), "EquivariantMF");
}

std::pair<std::size_t, std::size_t> EquivariantMF::ranks() const {
  std::size_t even = std::count(parity_.begin(), parity_.end(), 0);
  return {even, parity_.size() - even};
}

namespace {

PolyMatrix block(const EquivariantMF& m, int from) {
  std::vector<std::size_t> src, dst;
  for (std::size_t i = 0; i < m.size(); ++i) (m.parity()[i] == from ? src : dst).push_back(i);
  PolyMatrix out = poly_zero(dst.size(), src.size());
  for (std::size_t r = 0; r < dst.size(); ++r) {
    for (std::size_t c = 0; c < src.size(); ++c) out[r][c] = m.d()[dst[r]][src[c]];
  }
  return out;
}

}  // namespace

PolyMatrix EquivariantMF::d0() const { return block(*this, 0); }
PolyMatrix EquivariantMF::d1() const { return block(*this, 1); }

void EquivariantMF::validate() const {
  for (std::size_t t = 0; t < size(); ++t) {
    for (std::size_t s = 0; s < size(); ++s) {
      const Poly& p = d_[t][s];
      if (p.is_zero()) continue;
      if (parity_[t] == parity_[s]) throw std::domain_error("EquivariantMF: differential is not odd");
      for (const auto& [e, c] : p.terms()) {
        if (static_cast<int>(e.size()) != n_ + 1) throw std::domain_error("EquivariantMF: exponent length");
        if (exponent_weight(n_, e) != weight_[s] - weight_[t]) {
          throw std::domain_error("EquivariantMF: entry not homogeneous");
        }
      }
    }
  }
  const PolyMatrix sq = poly_mul(d_, d_);
  const Poly w = superpotential(n_);
  for (std::size_t t = 0; t < size(); ++t) {
    for (std::size_t s = 0; s < size(); ++s) {
      if (sq[t][s] != (t == s ? w : Poly())) throw std::domain_error("EquivariantMF: d^2 != W id");
    }
  }
}

EquivariantMF structure_mf(int n, int a) {
  if (n < 1 || a < 0 || a > n) throw std::out_of_range("structure_mf: index out of range");
  PolyMatrix d = poly_zero(2, 2);
  d[1][0] = monomial_of(n, full_subset(n) & ~(Subset(1) << a));
  d[0][1] = monomial_of(n, Subset(1) << a);
  EquivariantMF m(n, {0, 1}, {LatticeVector::zero(n), LatticeVector::basis(n, a)}, std::move(d));
  m.set_tag(StructureTag{a, LatticeVector::zero(n), 0});
  return m;
}

EquivariantMF koszul_mf(int n, Subset I) {
  const Subset comp = full_subset(n) & ~I;
  if (comp == 0) throw std::invalid_argument("koszul_mf: I must be proper");
  const std::vector<int> vars = subset_elements(comp);
  const int c1 = vars.front();
  const std::size_t size = std::size_t(1) << vars.size();
  // basis index = bitmask over positions in vars
  std::vector<int> parity(size);
  std::vector<LatticeVector> weight(size);
  for (std::size_t T = 0; T < size; ++T) {
    Subset sub = 0;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if ((T >> k) & 1u) sub |= Subset(1) << vars[k];
    }
    parity[T] = subset_size(sub) % 2;
    weight[T] = -LatticeVector::lambda(n, sub);
  }
  PolyMatrix d = poly_zero(size, size);
  const Poly w_c1 = monomial_of(n, full_subset(n) & ~(Subset(1) << c1));
  for (std::size_t T = 0; T < size; ++T) {
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if ((T >> k) & 1u) continue;
      const int sign = std::popcount(T & ((std::size_t(1) << k) - 1)) % 2 ? -1 : 1;
      d[T | (std::size_t(1) << k)][T] = monomial_of(n, Subset(1) << vars[k]) * Rational(sign);
    }
    if (T & 1u) d[T & ~std::size_t(1)][T] = w_c1;
  }
  return EquivariantMF(n, std::move(parity), std::move(weight), std::move(d));
}

EquivariantMF twist(const EquivariantMF& m, const LatticeVector& lambda) {
  std::vector<LatticeVector> w = m.weights();
  for (auto& x : w) x = x + lambda;
  EquivariantMF out(m.n(), m.parity(), std::move(w), m.d());
  if (m.tag()) {
    StructureTag t = *m.tag();
    t.twist = t.twist + lambda;
    out.set_tag(t);
  }
  return out;
}

EquivariantMF shift(const EquivariantMF& m) {
  std::vector<int> p = m.parity();
  for (auto& x : p) x = other(x);
  PolyMatrix d = m.d();
  for (auto& row : d) {
    for (auto& e : row) e = -e;
  }
  EquivariantMF out(m.n(), std::move(p), m.weights(), std::move(d));
  if (m.tag()) {
    StructureTag t = *m.tag();
    t.shift = (t.shift + 1) % 2;
    out.set_tag(t);
  }
  return out;
}

namespace {

PolyMatrix permute_entries(const PolyMatrix& m, const std::vector<int>& perm) {
  PolyMatrix out = m;
  for (auto& row : out) {
    for (auto& e : row) e = e.permuted(perm);
  }
  return out;
}

}  // namespace

EquivariantMF act(const WeylElement& g, const EquivariantMF& m) {
  std::vector<LatticeVector> w = m.weights();
  for (auto& x : w) x = g.apply(x);
  EquivariantMF out(m.n(), m.parity(), std::move(w), permute_entries(m.d(), g.perm()));
  if (m.tag()) {
    StructureTag t = *m.tag();
    t.a = g.apply(t.a);
    t.twist = g.apply(t.twist);
    out.set_tag(t);
  }
  return out;
}

EquivariantMF direct_sum(const EquivariantMF& a, const EquivariantMF& b) {
  if (a.n() != b.n()) throw std::invalid_argument("direct_sum: n mismatch");
  std::vector<int> p = a.parity();
  p.insert(p.end(), b.parity().begin(), b.parity().end());
  std::vector<LatticeVector> w = a.weights();
  w.insert(w.end(), b.weights().begin(), b.weights().end());
  PolyMatrix d = poly_zero(p.size(), p.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    for (std::size_t s = 0; s < a.size(); ++s) d[t][s] = a.d()[t][s];
  }
  for (std::size_t t = 0; t < b.size(); ++t) {
    for (std::size_t s = 0; s < b.size(); ++s) d[a.size() + t][a.size() + s] = b.d()[t][s];
  }
  return EquivariantMF(a.n(), std::move(p), std::move(w), std::move(d));
}

MFMorphism zero_morphism(const EquivariantMF& source, const EquivariantMF& target, int parity) {
  return MFMorphism{source, target, parity & 1, poly_zero(target.size(), source.size())};
}

MFMorphism identity(const EquivariantMF& m) {
  MFMorphism f = zero_morphism(m, m, 0);
  for (std::size_t i = 0; i < m.size(); ++i) f.m[i][i] = Poly::constant(m.n(), 1);
  return f;
}

void validate_morphism(const MFMorphism& f) {
  const int n = f.source.n();
  if (f.target.n() != n) throw std::invalid_argument("validate_morphism: n mismatch");
  if (f.m.size() != f.target.size()) throw std::domain_error("validate_morphism: shape mismatch");
  for (std::size_t t = 0; t < f.target.size(); ++t) {
    if (f.m[t].size() != f.source.size()) throw std::domain_error("validate_morphism: shape mismatch");
    for (std::size_t s = 0; s < f.source.size(); ++s) {
      const Poly& p = f.m[t][s];
      if (p.is_zero()) continue;
      if ((f.source.parity()[s] + f.parity) % 2 != f.target.parity()[t]) {
        throw std::domain_error("validate_morphism: parity mismatch");
      }
      for (const auto& [e, c] : p.terms()) {
        if (exponent_weight(n, e) != f.source.weights()[s] - f.target.weights()[t]) {
          throw std::domain_error("validate_morphism: entry not homogeneous");
        }
      }
    }
  }
}

MFMorphism hom_differential(const MFMorphism& f) {
  const Rational sign = f.parity ? 1 : -1;
  PolyMatrix dm = poly_add(poly_mul(f.target.d(), f.m), poly_mul(f.m, f.source.d()), sign);
  return MFMorphism{f.source, f.target, other(f.parity), std::move(dm)};
}

bool is_closed(const MFMorphism& f) { return poly_is_zero(hom_differential(f).m); }

MFMorphism compose(const MFMorphism& g, const MFMorphism& f) {
  if (!same_object(f.target, g.source)) throw std::invalid_argument("compose: objects do not match");
  return MFMorphism{f.source, g.target, (f.parity + g.parity) % 2, poly_mul(g.m, f.m)};
}

MFMorphism add(const MFMorphism& f, const MFMorphism& g, const Rational& scale) {
  if (!same_object(f.source, g.source) || !same_object(f.target, g.target) || f.parity != g.parity) {
    throw std::invalid_argument("add: morphisms do not match");
  }
  return MFMorphism{f.source, f.target, f.parity, poly_add(f.m, g.m, scale)};
}

MFMorphism twist(const MFMorphism& f, const LatticeVector& lambda) {
  return MFMorphism{twist(f.source, lambda), twist(f.target, lambda), f.parity, f.m};
}

MFMorphism act(const WeylElement& g, const MFMorphism& f) {
  return MFMorphism{act(g, f.source), act(g, f.target), f.parity, permute_entries(f.m, g.perm())};
}

EquivariantMF cone(const MFMorphism& f) {
  if (!is_closed(f)) throw std::invalid_argument("cone: morphism is not closed");
  const EquivariantMF& M = f.source;
  const EquivariantMF& N = f.target;
  // even f: M[1] + N with [[-d_M, 0], [f, d_N]]; odd f: M + N with [[d_M, 0], [f, d_N]]
  const std::size_t a = M.size();
  std::vector<int> p;
  for (int x : M.parity()) p.push_back(f.parity ? x : other(x));
  p.insert(p.end(), N.parity().begin(), N.parity().end());
  std::vector<LatticeVector> w = M.weights();
  w.insert(w.end(), N.weights().begin(), N.weights().end());
  PolyMatrix d = poly_zero(p.size(), p.size());
  const Rational sm = f.parity ? 1 : -1;
  for (std::size_t t = 0; t < a; ++t) {
    for (std::size_t s = 0; s < a; ++s) d[t][s] = M.d()[t][s] * sm;
  }
  for (std::size_t t = 0; t < N.size(); ++t) {
    for (std::size_t s = 0; s < a; ++s) d[a + t][s] = f.m[t][s];
    for (std::size_t s = 0; s < N.size(); ++s) d[a + t][a + s] = N.d()[t][s];
  }
  EquivariantMF c(M.n(), std::move(p), std::move(w), std::move(d));
  c.validate();
  return c;
}

MFMorphism f_map(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("f_map: requires i != j");
  const EquivariantMF src = structure_mf(n, i);
  const EquivariantMF dst = twist(structure_mf(n, j), LatticeVector::basis(n, i));
  MFMorphism f = zero_morphism(src, dst, 1);
  f.m[0][1] = Poly::constant(n, 1);
  f.m[1][0] = monomial_of(n, full_subset(n) & ~(Subset(1) << i) & ~(Subset(1) << j)) * Rational(-1);
  return f;
}

// ---------------------------------------------------------------------------
// Monomial engine

HomDims monomial_hom(int n, int a, const LatticeVector& lambda, int p, int b, const LatticeVector& mu, int q) {
  HomDims h;
  if (a == b) {
    const LatticeVector c = lambda - mu;
    bool other_zero = false;
    for (int k = 0; k <= n; ++k) {
      if (k != a && c[k] == 0) other_zero = true;
    }
    if (c[a] == 0 && other_zero) h.even = 1;
  } else {
    const LatticeVector c = LatticeVector::basis(n, a) + lambda - mu;
    if (c[a] == 0 && c[b] == 0) h.odd = 1;
  }
  if ((p + q) % 2) std::swap(h.even, h.odd);
  return h;
}

// ---------------------------------------------------------------------------
// Truncation engine

namespace {

/// R-degree: each entry z^u from s to t satisfies R(t) = R(s) + (n+1) - 2|u|.
std::optional<std::vector<long>> r_degrees(const EquivariantMF& m) {
  const long N = m.n() + 1;
  const std::size_t size = m.size();
  std::vector<std::vector<std::pair<std::size_t, long>>> adj(size);
  for (std::size_t t = 0; t < size; ++t) {
    for (std::size_t s = 0; s < size; ++s) {
      for (const auto& [e, c] : m.d()[t][s].terms()) {
        const long step = N - 2L * degree(e);
        adj[s].push_back({t, step});
        adj[t].push_back({s, -step});
      }
    }
  }
  std::vector<long> R(size, 0);
  std::vector<bool> seen(size, false);
  for (std::size_t root = 0; root < size; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (auto [w, step] : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          R[w] = R[v] + step;
          queue.push_back(w);
        } else if (R[w] != R[v] + step) {
          return std::nullopt;
        }
      }
    }
  }
  return R;
}

/// Hom(M, N) split by parity and R-level; the differential raises the level by n+1.
class HomLevels {
 public:
  HomLevels(const EquivariantMF& m, const EquivariantMF& n) : M_(m), N_(n), NN_(m.n() + 1) {
    auto rm = r_degrees(m);
    auto rn = r_degrees(n);
    if (!rm || !rn) throw std::invalid_argument("hom_cohomology: factorization is not quasi-homogeneous");
    RM_ = *rm;
    RN_ = *rn;
    for (int e = 0; e < 2; ++e) {
      for (std::size_t s = 0; s < m.size(); ++s) {
        for (std::size_t t = 0; t < n.size(); ++t) {
          if ((m.parity()[s] + e) % 2 != n.parity()[t]) continue;
          const Exponent base = weight_base(m.weights()[s] - n.weights()[t]);
          const long r0 = 2L * degree(base) + RN_[t] - RM_[s];
          index_[e][{s, t}] = pairs_[e].size();
          pairs_[e].push_back(Pair{s, t, base, r0});
        }
      }
    }
  }

  struct Pair {
    std::size_t s, t;
    Exponent base;
    long r0;
  };

  long period() const { return NN_; }
  const std::vector<Pair>& pairs(int e) const { return pairs_[e]; }

  /// Elements of (e, r): (pair index, multiple k of the unit monomial).
  std::vector<std::pair<std::size_t, long>> elements(int e, long r) const {
    std::vector<std::pair<std::size_t, long>> out;
    for (std::size_t i = 0; i < pairs_[e].size(); ++i) {
      const long diff = r - pairs_[e][i].r0;
      if (diff >= 0 && diff % (2 * NN_) == 0) out.push_back({i, diff / (2 * NN_)});
    }
    return out;
  }

  long element_degree(int e, std::size_t i, long k) const { return degree(pairs_[e][i].base) + k * NN_; }

  /// Matrix of the differential from (e, r) to (e+1, r+N).
  SparseMatrix delta(int e, long r) const {
    const auto src = elements(e, r);
    const auto dst = elements(other(e), r + NN_);
    std::map<std::pair<std::size_t, long>, std::size_t> col;
    for (std::size_t i = 0; i < dst.size(); ++i) col[dst[i]] = i;
    SparseMatrix out(dst.size(), src.size());
    const Rational sign = e ? 1 : -1;
    for (std::size_t j = 0; j < src.size(); ++j) {
      const Pair& p = pairs_[e][src[j].first];
      Exponent u = p.base;
      for (auto& x : u) x += static_cast<int>(src[j].second);
      auto put = [&](std::size_t s, std::size_t t, const Exponent& v, const Rational& c) {
        const std::size_t pi = index_[other(e)].at({s, t});
        const long k = min_coord(v);
        const std::size_t row = col.at({pi, k});
        out.add(row, j, c);
      };
      for (std::size_t t2 = 0; t2 < N_.size(); ++t2) {
        for (const auto& [v, c] : N_.d()[t2][p.t].terms()) put(p.s, t2, add_exp(u, v), c);
      }
      for (std::size_t s2 = 0; s2 < M_.size(); ++s2) {
        for (const auto& [v, c] : M_.d()[p.s][s2].terms()) put(s2, p.t, add_exp(u, v), c * sign);
      }
    }
    return out;
  }

  std::size_t cohomology(int e, long r) const {
    const std::size_t dim = elements(e, r).size();
    if (dim == 0) return 0;
    return cohomology_dim(dim, delta(other(e), r - NN_), delta(e, r));
  }

  /// Smallest level at which any element occurs, and the offset so that a level r contains only
  /// elements of degree <= D whenever r <= 2D + min_offset.
  long min_level() const {
    long lo = LONG_MAX;
    for (int e = 0; e < 2; ++e) {
      for (const auto& p : pairs_[e]) lo = std::min(lo, p.r0);
    }
    return lo;
  }
  long min_offset() const {
    long lo = LONG_MAX;
    for (int e = 0; e < 2; ++e) {
      for (const auto& p : pairs_[e]) lo = std::min(lo, static_cast<long>(RN_[p.t]) - RM_[p.s]);
    }
    return lo;
  }
  bool empty() const { return pairs_[0].empty() && pairs_[1].empty(); }

  /// Level of a single monomial entry.
  std::pair<int, long> locate(std::size_t s, std::size_t t, const Exponent& u, int e) const {
    return {e, 2L * degree(u) + RN_[t] - RM_[s]};
  }
  std::optional<std::size_t> element_index(int e, long r, std::size_t s, std::size_t t, const Exponent& u) const {
    const auto el = elements(e, r);
    auto it = index_[e].find({s, t});
    if (it == index_[e].end()) return std::nullopt;
    const long k = min_coord(u);
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (el[i].first == it->second && el[i].second == k) return i;
    }
    return std::nullopt;
  }

 private:
  const EquivariantMF& M_;
  const EquivariantMF& N_;
  long NN_;
  std::vector<long> RM_, RN_;
  std::vector<Pair> pairs_[2];
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_[2];
};

HomDims truncation_hom(const EquivariantMF& m, const EquivariantMF& n, int cap) {
  HomLevels levels(m, n);
  if (levels.empty()) return {};
  const long N = levels.period();
  const long lo = levels.min_level() - N;
  const long off = levels.min_offset();
  std::map<std::pair<int, long>, std::size_t> cache;
  auto level_dim = [&](int e, long r) {
    auto key = std::make_pair(e, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache[key] = levels.cohomology(e, r);
  };
  HomDims prev{-1, -1};
  int stable = 0;
  for (long D = m.n() + 2; D <= cap; D += N) {
    HomDims cur;
    const long hi = 2 * D + off;
    for (int e = 0; e < 2; ++e) {
      for (long r = lo; r <= hi; ++r) (e ? cur.odd : cur.even) += static_cast<int>(level_dim(e, r));
    }
    stable = (cur == prev) ? stable + 1 : 0;
    prev = cur;
    if (stable >= 3) return cur;
  }
  throw Inconclusive("hom_cohomology: truncation did not stabilize below degree cap " + std::to_string(cap));
}

}  // namespace

HomDims hom_cohomology(const EquivariantMF& m, const EquivariantMF& n, const LatticeVector& weight, HomEngine engine,
                       int degree_cap) {
  if (m.n() != n.n()) throw std::invalid_argument("hom_cohomology: n mismatch");
  const EquivariantMF target = twist(n, weight);
  if (engine != HomEngine::Truncation && m.tag() && target.tag()) {
    const StructureTag& s = *m.tag();
    const StructureTag& t = *target.tag();
    return monomial_hom(m.n(), s.a, s.twist, s.shift, t.a, t.twist, t.shift);
  }
  if (engine == HomEngine::Monomial) throw std::invalid_argument("hom_cohomology: monomial engine needs structure MFs");
  return truncation_hom(m, target, degree_cap);
}

HomDims hom_cohomology(const EquivariantMF& m, const EquivariantMF& n, HomEngine engine, int degree_cap) {
  return hom_cohomology(m, n, LatticeVector::zero(m.n()), engine, degree_cap);
}

bool is_boundary_class(const MFMorphism& f) {
  validate_morphism(f);
  if (!is_closed(f)) throw std::invalid_argument("is_boundary_class: morphism is not closed");
  HomLevels levels(f.source, f.target);
  const int e = f.parity;
  std::map<long, std::vector<std::tuple<std::size_t, std::size_t, Exponent, Rational>>> by_level;
  for (std::size_t t = 0; t < f.target.size(); ++t) {
    for (std::size_t s = 0; s < f.source.size(); ++s) {
      for (const auto& [u, c] : f.m[t][s].terms()) {
        by_level[levels.locate(s, t, u, e).second].emplace_back(s, t, u, c);
      }
    }
  }
  for (const auto& [r, terms] : by_level) {
    const std::size_t dim = levels.elements(e, r).size();
    std::vector<Rational> rhs(dim);
    for (const auto& [s, t, u, c] : terms) rhs[*levels.element_index(e, r, s, t, u)] += c;
    if (!solve(levels.delta(other(e), r - levels.period()), rhs)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Homotopy searches

namespace {

/// Solves d_N h - (-1)^|h| h d_M = g for h of parity |g|+1 with entries of degree <= D.
std::optional<MFMorphism> solve_homotopy(const MFMorphism& g, int D) {
  const EquivariantMF& M = g.source;
  const EquivariantMF& N = g.target;
  const int n = M.n();
  const long NN = n + 1;
  const int hp = other(g.parity);
  struct Unknown {
    std::size_t s, t;
    Exponent u;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t s = 0; s < M.size(); ++s) {
    for (std::size_t t = 0; t < N.size(); ++t) {
      if ((M.parity()[s] + hp) % 2 != N.parity()[t]) continue;
      const Exponent base = weight_base(M.weights()[s] - N.weights()[t]);
      for (long k = 0; degree(base) + k * NN <= D; ++k) {
        Exponent u = base;
        for (auto& x : u) x += static_cast<int>(k);
        unknowns.push_back({s, t, u});
      }
    }
  }
  std::map<std::tuple<std::size_t, std::size_t, Exponent>, std::size_t> row_of;
  auto row = [&](std::size_t s, std::size_t t, const Exponent& v) {
    auto key = std::make_tuple(s, t, v);
    auto it = row_of.find(key);
    if (it != row_of.end()) return it->second;
    const std::size_t r = row_of.size();
    row_of.emplace(key, r);
    return r;
  };
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
  const Rational sign = hp ? 1 : -1;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    const Unknown& x = unknowns[j];
    for (std::size_t t2 = 0; t2 < N.size(); ++t2) {
      for (const auto& [v, c] : N.d()[t2][x.t].terms()) entries.emplace_back(row(x.s, t2, add_exp(x.u, v)), j, c);
    }
    for (std::size_t s2 = 0; s2 < M.size(); ++s2) {
      for (const auto& [v, c] : M.d()[x.s][s2].terms()) {
        entries.emplace_back(row(s2, x.t, add_exp(x.u, v)), j, c * sign);
      }
    }
  }
  std::vector<std::tuple<std::size_t, Rational>> rhs_terms;
  for (std::size_t t = 0; t < N.size(); ++t) {
    for (std::size_t s = 0; s < M.size(); ++s) {
      for (const auto& [u, c] : g.m[t][s].terms()) rhs_terms.emplace_back(row(s, t, u), c);
    }
  }
  SparseMatrix A(row_of.size(), unknowns.size());
  for (const auto& [r, c, v] : entries) A.add(r, c, v);
  std::vector<Rational> b(row_of.size());
  for (const auto& [r, v] : rhs_terms) b[r] += v;
  auto x = solve(A, b);
  if (!x) return std::nullopt;
  MFMorphism h = zero_morphism(M, N, hp);
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    if ((*x)[j] != 0) h.m[unknowns[j].t][unknowns[j].s].add_term(unknowns[j].u, (*x)[j]);
  }
  return h;
}

}  // namespace

bool verify_certificate(const MFMorphism& g, const HomotopyCertificate& c) {
  if (c.h.parity != other(g.parity)) return false;
  if (!same_object(c.h.source, g.source) || !same_object(c.h.target, g.target)) return false;
  return hom_differential(c.h).m == g.m;
}

SearchResult nullhomotopy_search(const MFMorphism& g, int degree_cap) {
  validate_morphism(g);
  SearchResult result;
  int D = g.source.n() + 2;
  while (true) {
    const int bound = std::min(D, degree_cap);
    result.last_degree = bound;
    if (auto h = solve_homotopy(g, bound)) {
      HomotopyCertificate cert{std::move(*h), bound};
      if (!verify_certificate(g, cert)) throw std::logic_error("nullhomotopy_search: certificate failed verification");
      result.certificate = std::move(cert);
      return result;
    }
    if (bound >= degree_cap) return result;
    D *= 2;
  }
}

SearchResult is_contractible(const EquivariantMF& m, int degree_cap) {
  return nullhomotopy_search(identity(m), degree_cap);
}

// ---------------------------------------------------------------------------
// Acyclicity

namespace {

struct TwistedComplex {
  std::vector<EquivariantMF> objects;
  std::vector<MFMorphism> maps;  // f_t : X_t -> X_{t+1}
};

TwistedComplex f_chain(int n, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != n + 1) throw std::invalid_argument("acyclicity: order must list all elements");
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i <= n; ++i) {
    if (sorted[i] != i) throw std::invalid_argument("acyclicity: order is not a permutation");
  }
  TwistedComplex c;
  LatticeVector acc = LatticeVector::zero(n);
  for (int t = 0; t <= n; ++t) {
    c.objects.push_back(twist(structure_mf(n, order[t]), acc));
    if (t < n) c.maps.push_back(twist(f_map(n, order[t], order[t + 1]), acc));
    acc = acc + LatticeVector::basis(n, order[t]);
  }
  return c;
}

/// Totalizes the chain with Maurer-Cartan corrections q[a][b] : X_a -> X_b (odd).
EquivariantMF totalize(const TwistedComplex& c, int cap, int& max_degree, bool& compositions_null) {
  const std::size_t L = c.objects.size();
  std::map<std::pair<std::size_t, std::size_t>, MFMorphism> q;
  for (std::size_t t = 0; t + 1 < L; ++t) q.emplace(std::make_pair(t, t + 1), c.maps[t]);
  compositions_null = true;
  for (std::size_t len = 2; len < L; ++len) {
    for (std::size_t a = 0; a + len < L; ++a) {
      const std::size_t b = a + len;
      MFMorphism rhs = zero_morphism(c.objects[a], c.objects[b], 0);
      for (std::size_t m = a + 1; m < b; ++m) rhs = add(rhs, compose(q.at({m, b}), q.at({a, m})));
      MFMorphism g = rhs;
      for (auto& row : g.m) {
        for (auto& e : row) e = -e;
      }
      const SearchResult res = nullhomotopy_search(g, cap);
      max_degree = std::max(max_degree, res.last_degree);
      if (!res.certificate) {
        if (len == 2) compositions_null = false;
        throw Inconclusive("acyclicity: no correction found below degree cap " + std::to_string(cap));
      }
      q.emplace(std::make_pair(a, b), res.certificate->h);
    }
  }
  std::vector<int> p;
  std::vector<LatticeVector> w;
  std::vector<std::size_t> offset;
  for (const auto& x : c.objects) {
    offset.push_back(p.size());
    p.insert(p.end(), x.parity().begin(), x.parity().end());
    w.insert(w.end(), x.weights().begin(), x.weights().end());
  }
  PolyMatrix d = poly_zero(p.size(), p.size());
  for (std::size_t a = 0; a < L; ++a) {
    const auto& x = c.objects[a];
    for (std::size_t t = 0; t < x.size(); ++t) {
      for (std::size_t s = 0; s < x.size(); ++s) d[offset[a] + t][offset[a] + s] = x.d()[t][s];
    }
  }
  for (const auto& [ab, f] : q) {
    for (std::size_t t = 0; t < f.target.size(); ++t) {
      for (std::size_t s = 0; s < f.source.size(); ++s) d[offset[ab.second] + t][offset[ab.first] + s] = f.m[t][s];
    }
  }
  EquivariantMF total(c.objects[0].n(), std::move(p), std::move(w), std::move(d));
  total.validate();
  return total;
}

}  // namespace

EquivariantMF acyclic_totalization(int n, const std::vector<int>& order, int degree_cap) {
  int max_degree = 0;
  bool null = false;
  return totalize(f_chain(n, order), degree_cap, max_degree, null);
}

AcyclicityReport check_acyclicity(int n, const std::vector<int>& order, int degree_cap) {
  AcyclicityReport report;
  report.order = order;
  const TwistedComplex chain = f_chain(n, order);
  report.compositions_null = true;
  for (std::size_t t = 0; t + 1 < chain.maps.size(); ++t) {
    const SearchResult r = nullhomotopy_search(compose(chain.maps[t + 1], chain.maps[t]), degree_cap);
    report.max_degree = std::max(report.max_degree, r.last_degree);
    if (!r.certificate) {
      report.compositions_null = false;
      report.inconclusive = true;
    }
  }
  try {
    bool null = false;
    const EquivariantMF total = totalize(chain, degree_cap, report.max_degree, null);
    const SearchResult r = is_contractible(total, degree_cap);
    report.max_degree = std::max(report.max_degree, r.last_degree);
    report.contractible = r.certificate.has_value();
    if (!report.contractible) report.inconclusive = true;
  } catch (const Inconclusive&) {
    report.inconclusive = true;
  }
  return report;
}

}  // namespace hm
