#include "honeymirror/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hm {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("SparseMatrix::add index");
  if (value == 0) return;
  auto& row = rows_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, value);
    return;
  }
  it->second += value;
  if (it->second == 0) row.erase(it);
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

namespace {

using Row = std::map<std::size_t, Rational>;

// row -= factor * pivot_row
void eliminate(Row& row, const Row& pivot_row, const Rational& factor) {
  for (const auto& [c, v] : pivot_row) {
    auto it = row.find(c);
    if (it == row.end()) {
      row.emplace(c, -factor * v);
    } else {
      it->second -= factor * v;
      if (it->second == 0) row.erase(it);
    }
  }
}

// Forward elimination with a sparsity-aware pivot choice. Each stored pivot row
// has its leading column as key; rows with an augmented entry carry it in `rhs`.
struct Pivot {
  std::size_t col;
  Row row;
  Rational rhs;
};

struct Echelon {
  std::vector<Pivot> pivots;  // in selection order
  bool consistent = true;
};

Echelon reduce(const SparseMatrix& m, const std::vector<Rational>* b) {
  std::vector<Row> rows;
  std::vector<Rational> rhs;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).empty()) {
      if (b && (*b)[r] != 0) {
        Echelon e;
        e.consistent = false;
        return e;
      }
      continue;
    }
    rows.push_back(m.row(r));
    rhs.push_back(b ? (*b)[r] : Rational(0));
  }

  Echelon out;
  std::vector<bool> alive(rows.size(), true);
  std::size_t remaining = rows.size();
  while (remaining > 0) {
    // Pick the shortest live row; its first column becomes a pivot.
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive[i]) continue;
      if (best == rows.size() || rows[i].size() < rows[best].size()) best = i;
      if (rows[best].size() == 1) break;
    }
    Row pivot = std::move(rows[best]);
    Rational prhs = rhs[best];
    alive[best] = false;
    --remaining;
    const std::size_t col = pivot.begin()->first;
    const Rational lead = pivot.begin()->second;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive[i]) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      Rational factor = it->second / lead;
      eliminate(rows[i], pivot, factor);
      rhs[i] -= factor * prhs;
      if (rows[i].empty()) {
        alive[i] = false;
        --remaining;
        if (rhs[i] != 0) out.consistent = false;
      }
    }
    out.pivots.push_back(Pivot{col, std::move(pivot), prhs});
  }
  return out;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) { return reduce(m, nullptr).pivots.size(); }

std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  Echelon e = reduce(m, &b);
  if (!e.consistent) return std::nullopt;
  // A pivot row only involves pivot columns selected after it.
  std::vector<Rational> x(m.cols(), Rational(0));
  for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
    Rational acc = it->rhs;
    for (const auto& [c, v] : it->row) {
      if (c != it->col) acc -= v * x[c];
    }
    x[it->col] = acc / it->row.at(it->col);
  }
  // Verify exactly.
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc = 0;
    for (const auto& [c, v] : m.row(r)) acc += v * x[c];
    if (acc != b[r]) throw std::logic_error("solve: solution failed verification");
  }
  return x;
}

std::vector<std::vector<Rational>> kernel(const SparseMatrix& m) {
  Echelon e = reduce(m, nullptr);
  std::vector<bool> pivot(m.cols(), false);
  for (const auto& p : e.pivots) pivot[p.col] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot[f]) continue;
    std::vector<Rational> x(m.cols(), Rational(0));
    x[f] = 1;
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
      Rational acc = 0;
      for (const auto& [c, v] : it->row) {
        if (c != it->col) acc -= v * x[c];
      }
      x[it->col] = acc / it->row.at(it->col);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t cohomology_dim(std::size_t dim, const SparseMatrix& in, const SparseMatrix& out) {
  if (in.rows() != dim || out.cols() != dim) throw std::invalid_argument("cohomology_dim: shape mismatch");
  const std::size_t r_out = rank(out);
  const std::size_t r_in = rank(in);
  if (r_out + r_in > dim) throw std::logic_error("cohomology_dim: not a complex");
  return dim - r_out - r_in;
}

}  // namespace hm
