#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "honeymirror/linalg.hpp"

namespace hm {

/// Object s_{i,j} of the local category attached to a cyclic set of `size`
/// elements: the twisted complex s_i -> s_{i+1} -> ... -> s_j, shifted by `parity`.
/// Indices are positions in the cyclic set. The interval never covers the whole set.
struct IntervalObject {
  int size = 0;
  int i = 0;
  int j = 0;
  int parity = 0;

  /// Number of elements i, i+1, ..., j.
  int length() const { return (j - i + size) % size + 1; }
  bool contains(int k) const { return (k - i + size) % size < length(); }
  IntervalObject shifted(int p = 1) const { return {size, i, j, (parity + p) & 1}; }
  bool operator==(const IntervalObject& o) const = default;
  auto operator<=>(const IntervalObject& o) const = default;
  std::string str() const;
};

/// Validates and builds s_{i,j}.
IntervalObject interval(int size, int i, int j, int parity = 0);
inline IntervalObject simple_object(int size, int k, int parity = 0) { return interval(size, k, k, parity); }
/// Every interval object over a cyclic set of the given size, both parities.
std::vector<IntervalObject> all_intervals(int size);

/// Dimensions of Z/2-graded Hom cohomology.
struct LocalHomSpace {
  int even = 0;
  int odd = 0;
  int total() const { return even + odd; }
  int at(int parity) const { return (parity & 1) ? odd : even; }
  bool operator==(const LocalHomSpace& o) const = default;
};

LocalHomSpace hom_intervals(const IntervalObject& a, const IntervalObject& b);

/// Image under the quotient by s_k (element k removed; later indices shift down).
/// Returns nullopt for the zero object.
std::optional<IntervalObject> restrict(int k, const IntervalObject& a);

/// Whether the quotient by s_k sends the basis class of hom^parity(a, b) to a
/// nonzero class. Restriction maps use +1 as the scalar on basis classes.
bool restrict_hom(int k, const IntervalObject& a, const IntervalObject& b, int parity);

/// Whether composing the basis classes of hom^{e1}(a, b) and hom^{e2}(b, c)
/// gives a nonzero class.
bool compose_nonzero(const IntervalObject& a, const IntervalObject& b, const IntervalObject& c, int e1, int e2);

/// Left adjoint of restriction on objects: `position` is the index of the
/// inserted element in the enlarged cyclic set of size a.size + 1.
IntervalObject corestrict_object(int position, const IntervalObject& a);

/// Interval module [lo, hi] over the linear quiver 1 -> ... -> r, with parity,
/// corresponding to an interval object under the linearization cutting at `cut`.
struct IntervalModule {
  int r = 0;
  int lo = 0;
  int hi = 0;
  int parity = 0;
};
IntervalModule linearize(const IntervalObject& a, int cut);

// Model of the local category: Z/2-graded complexes of indecomposable projectives
// P_1, ..., P_r of the linear quiver, where Hom(P_x, P_y) = k iff y <= x.
namespace model {

struct Summand {
  int vertex;  // 1..r
  int parity;
};

/// Dense matrices indexed [target summand][source summand].
using Matrix = std::vector<std::vector<Rational>>;

struct Complex {
  int r = 0;
  std::vector<Summand> summands;
  Matrix d;  // odd, squares to zero
};

struct Morphism {
  int parity = 0;
  Matrix m;
};

Complex module_complex(const IntervalModule& mod);
Complex shifted(const Complex& c);
/// Direct sum with an upper-triangular twisting: `twist` maps between blocks.
Complex twisted_sum(const std::vector<Complex>& parts, const std::vector<std::vector<Matrix>>& twist);

bool allowed(const Summand& source, const Summand& target, int parity);
Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b, const Rational& scale = 1);
bool is_zero(const Matrix& a);
void check_complex(const Complex& c);

/// Differential of the Hom complex: d_N f - (-1)^e f d_M.
Matrix hom_differential(const Complex& source, const Complex& target, const Morphism& f);
/// Cohomology dimension of Hom^parity(source, target).
int hom_dim(const Complex& source, const Complex& target, int parity);
/// Cocycles of Hom^parity(source, target) representing a basis of cohomology.
std::vector<Morphism> hom_basis(const Complex& source, const Complex& target, int parity);
/// Whether a cocycle is a coboundary.
bool is_boundary(const Complex& source, const Complex& target, const Morphism& f);
/// Solves hom_differential(x) = g for x of parity g.parity + 1, if possible.
std::optional<Morphism> solve_boundary(const Complex& source, const Complex& target, const Morphism& g);
Morphism compose(const Morphism& g, const Morphism& f);

}  // namespace model

}  // namespace hm
