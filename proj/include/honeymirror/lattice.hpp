#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "honeymirror/linalg.hpp"

namespace hm {

/// Bitmask of a subset of [n+1] = {0, ..., n}. Element n is the anchor element.
using Subset = std::uint32_t;

inline Subset full_subset(int n) { return (Subset(1) << (n + 1)) - 1; }
inline bool subset_contains(Subset s, int i) { return (s >> i) & 1u; }
int subset_size(Subset s);
std::vector<int> subset_elements(Subset s);

/// Element of the weight lattice Z^{n+1}/Z(1,...,1), stored by its canonical lift
/// (minimum coordinate 0).
class LatticeVector {
 public:
  LatticeVector() = default;
  /// Canonicalizes an arbitrary lift; n = raw.size() - 1.
  explicit LatticeVector(std::vector<long long> raw);

  static LatticeVector zero(int n);
  /// lambda_I, the sum of basis vectors over I.
  static LatticeVector lambda(int n, Subset I);
  static LatticeVector basis(int n, int a) { return lambda(n, Subset(1) << a); }

  int n() const { return static_cast<int>(lift_.size()) - 1; }
  const std::vector<long long>& lift() const { return lift_; }
  long long operator[](int i) const { return lift_[i]; }

  /// Word norm for the generators {lambda_I}: max minus min of any lift.
  long long norm() const;
  bool is_zero() const;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector operator*(long long k) const;

  bool operator==(const LatticeVector& o) const { return lift_ == o.lift_; }
  bool operator!=(const LatticeVector& o) const { return lift_ != o.lift_; }
  bool operator<(const LatticeVector& o) const { return lift_ < o.lift_; }

  std::string str() const;

 private:
  std::vector<long long> lift_;
};

LatticeVector canonicalize(const std::vector<long long>& raw);

/// All lattice vectors v with norm(v - center) <= radius, in lexicographic order.
std::vector<LatticeVector> lattice_ball(const LatticeVector& center, int radius);

/// Point of V_n in the affine chart with last coordinate 0.
struct RationalPoint {
  std::vector<Rational> coords;

  int n() const { return static_cast<int>(coords.size()) - 1; }
  /// Re-normalizes an arbitrary representative so that the last coordinate is 0.
  static RationalPoint from_lift(std::vector<Rational> lift);
  RationalPoint operator+(const RationalPoint& o) const;
  RationalPoint operator-(const RationalPoint& o) const;
  RationalPoint scaled(const Rational& k) const;
  bool operator==(const RationalPoint& o) const { return coords == o.coords; }
  bool operator<(const RationalPoint& o) const { return coords < o.coords; }
  std::vector<std::string> str() const;
};

RationalPoint realize(const LatticeVector& v);
/// Squared length of the projection to the sum-zero hyperplane; well defined on V_n.
Rational squared_norm(const RationalPoint& p);
Rational squared_distance(const RationalPoint& p, const RationalPoint& q);
/// Sum-zero representative (orthogonal projection of the lift).
std::vector<Rational> sum_zero_coords(const RationalPoint& p);

/// Element (t, sigma) of the affine Weyl group; acts by v -> t + sigma(v), where
/// sigma moves coordinate i to position perm[i].
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(LatticeVector translation, std::vector<int> perm);

  static WeylElement identity(int n);
  static WeylElement translation(const LatticeVector& t);
  static WeylElement permutation(std::vector<int> perm);
  /// Transposition of the elements a and b.
  static WeylElement transposition(int n, int a, int b);
  /// Generators: the translations lambda_a for a < n and the adjacent transpositions.
  static std::vector<WeylElement> generators(int n);

  int n() const { return translation_.n(); }
  const LatticeVector& translation_part() const { return translation_; }
  const std::vector<int>& perm() const { return perm_; }

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const {
    return translation_ == o.translation_ && perm_ == o.perm_;
  }

  LatticeVector apply(const LatticeVector& v) const;
  /// Linear part only.
  LatticeVector apply_linear(const LatticeVector& v) const;
  RationalPoint apply(const RationalPoint& p) const;
  Subset apply(Subset s) const;
  int apply(int element) const { return perm_[element]; }

 private:
  LatticeVector translation_;
  std::vector<int> perm_;
};

LatticeVector weyl_apply(const WeylElement& g, const LatticeVector& v);

}  // namespace hm

template <>
struct std::hash<hm::LatticeVector> {
  std::size_t operator()(const hm::LatticeVector& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v.lift()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
