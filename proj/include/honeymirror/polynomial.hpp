#pragma once

#include <map>
#include <string>
#include <vector>

#include "honeymirror/lattice.hpp"

namespace hm {

/// Exponent vector of a monomial in z_0, ..., z_n.
using Exponent = std::vector<int>;

int degree(const Exponent& e);
/// Lambda-weight of z^e, where z_c has weight lambda_c.
LatticeVector exponent_weight(int n, const Exponent& e);
/// The monomials of a weight class are base + k(1,...,1), k >= 0, with base the canonical lift.
Exponent weight_base(const LatticeVector& w);

/// Polynomial with rational coefficients.
class Poly {
 public:
  Poly() = default;
  static Poly monomial(const Exponent& e, const Rational& c = 1);
  static Poly constant(int n, const Rational& c);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return terms_ != o.terms_; }

  /// Renames variables: z_c -> z_{perm[c]}.
  Poly permuted(const std::vector<int>& perm) const;
  std::string str() const;

 private:
  std::map<Exponent, Rational> terms_;
};

/// Matrix of polynomials indexed [row][col].
using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix poly_zero(std::size_t rows, std::size_t cols);
PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_add(const PolyMatrix& a, const PolyMatrix& b, const Rational& scale = 1);
bool poly_is_zero(const PolyMatrix& a);

/// z_0 z_1 ... z_n.
Poly superpotential(int n);
/// Product of z_c over c in the subset.
Poly monomial_of(int n, Subset s);

}  // namespace hm
