#include "honeymirror/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace hm {

int subset_size(Subset s) { return std::popcount(s); }

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s >> i; ++i) {
    if (subset_contains(s, i)) out.push_back(i);
  }
  return out;
}

LatticeVector::LatticeVector(std::vector<long long> raw) : lift_(std::move(raw)) {
  if (lift_.size() < 2) throw std::invalid_argument("LatticeVector: need n >= 1 (length >= 2)");
  const long long lo = *std::min_element(lift_.begin(), lift_.end());
  for (auto& x : lift_) x -= lo;
}

LatticeVector LatticeVector::zero(int n) {
  if (n < 1) throw std::invalid_argument("LatticeVector: n must be positive");
  return LatticeVector(std::vector<long long>(n + 1, 0));
}

LatticeVector LatticeVector::lambda(int n, Subset I) {
  if (n < 1) throw std::invalid_argument("LatticeVector: n must be positive");
  if (I & ~full_subset(n)) throw std::invalid_argument("LatticeVector::lambda: subset out of range");
  std::vector<long long> raw(n + 1, 0);
  for (int i = 0; i <= n; ++i) raw[i] = subset_contains(I, i) ? 1 : 0;
  return LatticeVector(std::move(raw));
}

long long LatticeVector::norm() const { return *std::max_element(lift_.begin(), lift_.end()); }

bool LatticeVector::is_zero() const { return norm() == 0; }

namespace {
void check_same(const LatticeVector& a, const LatticeVector& b) {
  if (a.n() != b.n()) throw std::invalid_argument("LatticeVector: dimension mismatch");
}
}  // namespace

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  check_same(*this, o);
  std::vector<long long> raw(lift_);
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += o.lift_[i];
  return LatticeVector(std::move(raw));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  check_same(*this, o);
  std::vector<long long> raw(lift_);
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] -= o.lift_[i];
  return LatticeVector(std::move(raw));
}

LatticeVector LatticeVector::operator-() const {
  std::vector<long long> raw(lift_);
  for (auto& x : raw) x = -x;
  return LatticeVector(std::move(raw));
}

LatticeVector LatticeVector::operator*(long long k) const {
  std::vector<long long> raw(lift_);
  for (auto& x : raw) x *= k;
  return LatticeVector(std::move(raw));
}

std::string LatticeVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < lift_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lift_[i]);
  }
  return s + ")";
}

LatticeVector canonicalize(const std::vector<long long>& raw) { return LatticeVector(raw); }

std::vector<LatticeVector> lattice_ball(const LatticeVector& center, int radius) {
  if (radius < 0) throw std::invalid_argument("lattice_ball: negative radius");
  const int n = center.n();
  std::set<LatticeVector> out;
  std::vector<long long> w(n + 1, 0);
  // Odometer over {0..radius}^{n+1}; keep lifts with minimum 0.
  while (true) {
    if (*std::min_element(w.begin(), w.end()) == 0) out.insert(center + LatticeVector(w));
    int i = 0;
    while (i <= n && w[i] == radius) w[i++] = 0;
    if (i > n) break;
    ++w[i];
  }
  return {out.begin(), out.end()};
}

RationalPoint RationalPoint::from_lift(std::vector<Rational> lift) {
  if (lift.size() < 2) throw std::invalid_argument("RationalPoint: need n >= 1");
  const Rational last = lift.back();
  for (auto& x : lift) x -= last;
  return RationalPoint{std::move(lift)};
}

RationalPoint RationalPoint::operator+(const RationalPoint& o) const {
  std::vector<Rational> c(coords);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords.at(i);
  return from_lift(std::move(c));
}

RationalPoint RationalPoint::operator-(const RationalPoint& o) const {
  std::vector<Rational> c(coords);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords.at(i);
  return from_lift(std::move(c));
}

RationalPoint RationalPoint::scaled(const Rational& k) const {
  std::vector<Rational> c(coords);
  for (auto& x : c) x *= k;
  return from_lift(std::move(c));
}

std::vector<std::string> RationalPoint::str() const {
  std::vector<std::string> out;
  for (const auto& c : coords) out.push_back(to_string(c));
  return out;
}

RationalPoint realize(const LatticeVector& v) {
  std::vector<Rational> c;
  for (auto x : v.lift()) c.emplace_back(static_cast<long>(x));
  return RationalPoint::from_lift(std::move(c));
}

std::vector<Rational> sum_zero_coords(const RationalPoint& p) {
  Rational mean = 0;
  for (const auto& c : p.coords) mean += c;
  mean /= static_cast<long>(p.coords.size());
  std::vector<Rational> out(p.coords);
  for (auto& c : out) c -= mean;
  return out;
}

Rational squared_norm(const RationalPoint& p) {
  Rational sq = 0, sum = 0;
  for (const auto& c : p.coords) {
    sq += c * c;
    sum += c;
  }
  return sq - sum * sum / static_cast<long>(p.coords.size());
}

Rational squared_distance(const RationalPoint& p, const RationalPoint& q) { return squared_norm(p - q); }

WeylElement::WeylElement(LatticeVector translation, std::vector<int> perm)
    : translation_(std::move(translation)), perm_(std::move(perm)) {
  const int n = translation_.n();
  if (static_cast<int>(perm_.size()) != n + 1) throw std::invalid_argument("WeylElement: permutation length");
  std::vector<int> sorted(perm_);
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i <= n; ++i) {
    if (sorted[i] != i) throw std::invalid_argument("WeylElement: not a permutation");
  }
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  return WeylElement(LatticeVector::zero(n), std::move(p));
}

WeylElement WeylElement::translation(const LatticeVector& t) {
  WeylElement g = identity(t.n());
  g.translation_ = t;
  return g;
}

WeylElement WeylElement::permutation(std::vector<int> perm) {
  const int n = static_cast<int>(perm.size()) - 1;
  return WeylElement(LatticeVector::zero(n), std::move(perm));
}

WeylElement WeylElement::transposition(int n, int a, int b) {
  WeylElement g = identity(n);
  std::swap(g.perm_.at(a), g.perm_.at(b));
  return g;
}

std::vector<WeylElement> WeylElement::generators(int n) {
  std::vector<WeylElement> out;
  for (int a = 0; a < n; ++a) out.push_back(translation(LatticeVector::basis(n, a)));
  for (int a = 0; a < n; ++a) out.push_back(transposition(n, a, a + 1));
  return out;
}

LatticeVector WeylElement::apply_linear(const LatticeVector& v) const {
  if (v.n() != n()) throw std::invalid_argument("WeylElement: dimension mismatch");
  std::vector<long long> raw(v.lift().size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[perm_[i]] = v.lift()[i];
  return LatticeVector(std::move(raw));
}

LatticeVector WeylElement::apply(const LatticeVector& v) const { return translation_ + apply_linear(v); }

RationalPoint WeylElement::apply(const RationalPoint& p) const {
  if (p.n() != n()) throw std::invalid_argument("WeylElement: dimension mismatch");
  std::vector<Rational> c(p.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[perm_[i]] = p.coords[i];
  return RationalPoint::from_lift(std::move(c)) + realize(translation_);
}

Subset WeylElement::apply(Subset s) const {
  Subset out = 0;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (subset_contains(s, static_cast<int>(i))) out |= Subset(1) << perm_[i];
  }
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  std::vector<int> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = perm_[o.perm_[i]];
  return WeylElement(translation_ + apply_linear(o.translation_), std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[perm_[i]] = static_cast<int>(i);
  WeylElement inv = permutation(std::move(p));
  inv.translation_ = -inv.apply_linear(translation_);
  return inv;
}

LatticeVector weyl_apply(const WeylElement& g, const LatticeVector& v) { return g.apply(v); }

}  // namespace hm
