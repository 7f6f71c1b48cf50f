#pragma once

// Test-only rank oracle: plain Gaussian elimination over exact rationals,
// kept independent of the library's integer elimination path.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wopkit/weak_order.hpp"

namespace testsupport {

using Rational = boost::multiprecision::cpp_rational;

inline int rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  return static_cast<int>(row);
}

inline int rational_affine_rank(const std::vector<wopkit::WeakOrder>& points) {
  if (points.empty()) return 0;
  const int n = points.front().n();
  std::vector<std::vector<Rational>> m;
  for (const auto& w : points) {
    std::vector<Rational> row(static_cast<std::size_t>(wopkit::num_pairs(n)) + 1, 0);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && w.bit(i, j)) row[static_cast<std::size_t>(wopkit::pair_index(i, j, n))] = 1;
    row.back() = 1;
    m.push_back(std::move(row));
  }
  return rational_rank(std::move(m));
}

}  // namespace testsupport
