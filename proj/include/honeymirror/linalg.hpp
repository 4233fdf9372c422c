#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hm {

using Rational = mpq_class;

/// Renders a rational as "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Sparse matrix over Q stored by rows. Zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds `value` to entry (r, c), dropping the entry if it cancels.
  void add(std::size_t r, std::size_t c, const Rational& value);
  Rational get(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Rational>& row(std::size_t r) const { return rows_[r]; }

  std::size_t nonzeros() const;

 private:
  std::vector<std::map<std::size_t, Rational>> rows_;
  std::size_t cols_ = 0;
};

/// Exact rank over Q.
std::size_t rank(const SparseMatrix& m);

/// Solves m * x = b exactly. Returns one solution (free variables set to 0), or
/// nullopt if the system is inconsistent.
std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b);

/// Basis of the kernel of m, one vector per free column.
std::vector<std::vector<Rational>> kernel(const SparseMatrix& m);

/// Dimension of ker(out) / im(in) for a three-term complex V' --in--> V --out--> V''.
/// `dim` is the dimension of V.
std::size_t cohomology_dim(std::size_t dim, const SparseMatrix& in, const SparseMatrix& out);

}  // namespace hm
