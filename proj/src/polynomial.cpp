#include "honeymirror/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace hm {

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

LatticeVector exponent_weight(int n, const Exponent& e) {
  if (static_cast<int>(e.size()) != n + 1) throw std::invalid_argument("exponent_weight: length mismatch");
  return LatticeVector(std::vector<long long>(e.begin(), e.end()));
}

Exponent weight_base(const LatticeVector& w) { return Exponent(w.lift().begin(), w.lift().end()); }

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p;
  p.add_term(e, c);
  return p;
}

Poly Poly::constant(int n, const Rational& c) { return monomial(Exponent(n + 1, 0), c); }

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  Poly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly Poly::operator*(const Poly& o) const {
  Poly p;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(e1);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2.at(i);
      p.add_term(e, c1 * c2);
    }
  }
  return p;
}

Poly Poly::operator*(const Rational& c) const {
  Poly p;
  if (c == 0) return p;
  for (const auto& [e, x] : terms_) p.terms_.emplace(e, x * c);
  return p;
}

Poly Poly::permuted(const std::vector<int>& perm) const {
  Poly p;
  for (const auto& [e, c] : terms_) {
    Exponent f(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[perm.at(i)] = e[i];
    p.add_term(f, c);
  }
  return p;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono += "z" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += to_string(c);
    } else if (c == 1) {
      s += mono;
    } else if (c == -1) {
      s += "-" + mono;
    } else {
      s += to_string(c) + "*" + mono;
    }
  }
  return s;
}

PolyMatrix poly_zero(std::size_t rows, std::size_t cols) { return PolyMatrix(rows, std::vector<Poly>(cols)); }

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  PolyMatrix out = poly_zero(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("poly_mul: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!b[k][j].is_zero()) out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

PolyMatrix poly_add(const PolyMatrix& a, const PolyMatrix& b, const Rational& scale) {
  if (a.size() != b.size()) throw std::invalid_argument("poly_add: shape mismatch");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw std::invalid_argument("poly_add: shape mismatch");
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (!b[i][j].is_zero()) out[i][j] = out[i][j] + b[i][j] * scale;
    }
  }
  return out;
}

bool poly_is_zero(const PolyMatrix& a) {
  for (const auto& row : a) {
    for (const auto& p : row) {
      if (!p.is_zero()) return false;
    }
  }
  return true;
}

Poly superpotential(int n) { return monomial_of(n, full_subset(n)); }

Poly monomial_of(int n, Subset s) {
  Exponent e(n + 1, 0);
  for (int c = 0; c <= n; ++c) e[c] = subset_contains(s, c) ? 1 : 0;
  return Poly::monomial(e);
}

}  // namespace hm
