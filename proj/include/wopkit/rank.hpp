#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wopkit/errors.hpp"
#include "wopkit/weak_order.hpp"

namespace wopkit {

// Incremental integer echelon basis. Rows are reduced with the division-free
// update v <- b[p]*v - v[p]*b against basis rows in pivot order, then
// gcd-normalized, so all arithmetic stays in the integers. Rank over the
// rationals equals the number of stored rows.
class IntegerRowBasis {
 public:
  using Int = boost::multiprecision::cpp_int;

  explicit IntegerRowBasis(int cols) : cols_(cols) {
    if (cols < 1) throw ParameterError("IntegerRowBasis: need at least one column");
  }

  // Returns true when the row was independent of the basis.
  bool insert(std::vector<Int> row) {
    if (static_cast<int>(row.size()) != cols_)
      throw ParameterError("IntegerRowBasis: row width mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivot_[r];
      if (row[static_cast<std::size_t>(p)] == 0) continue;
      const Int scale = rows_[r][static_cast<std::size_t>(p)];
      const Int factor = row[static_cast<std::size_t>(p)];
      for (int c = 0; c < cols_; ++c)
        row[static_cast<std::size_t>(c)] =
            scale * row[static_cast<std::size_t>(c)] - factor * rows_[r][static_cast<std::size_t>(c)];
    }
    int lead = -1;
    for (int c = 0; c < cols_; ++c)
      if (row[static_cast<std::size_t>(c)] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) return false;
    Int g = 0;
    for (const Int& v : row) g = boost::multiprecision::gcd(g, v);
    if (row[static_cast<std::size_t>(lead)] < 0) g = -g;
    for (Int& v : row) v /= g;
    // Keep rows ordered by pivot column so reduction sees pivots ascending.
    std::size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < lead) ++pos;
    pivot_.insert(pivot_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  bool saturated() const { return rank() == cols_; }

 private:
  int cols_;
  std::vector<int> pivot_;
  std::vector<std::vector<Int>> rows_;
};

inline int matrix_rank(const std::vector<std::vector<boost::multiprecision::cpp_int>>& m) {
  if (m.empty()) throw ParameterError("matrix_rank: empty matrix");
  IntegerRowBasis basis(static_cast<int>(m.front().size()));
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw ParameterError("matrix_rank: ragged matrix");
    basis.insert(row);
    if (basis.saturated()) break;
  }
  return basis.rank();
}

// Rank of the point matrix with an all-ones column appended: the number of
// affinely independent points.
inline int affine_rank(const std::vector<WeakOrder>& points) {
  if (points.empty()) throw ParameterError("affine_rank: no points");
  const int n = points.front().n();
  const int cols = num_pairs(n) + 1;
  IntegerRowBasis basis(cols);
  std::vector<boost::multiprecision::cpp_int> row(static_cast<std::size_t>(cols));
  for (const WeakOrder& w : points) {
    if (w.n() != n) throw ParameterError("affine_rank: mixed dimensions");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) row[static_cast<std::size_t>(pair_index(i, j, n))] = w.bit(i, j) ? 1 : 0;
    row[static_cast<std::size_t>(cols - 1)] = 1;
    basis.insert(row);
    if (basis.saturated()) break;
  }
  return basis.rank();
}

}  // namespace wopkit
