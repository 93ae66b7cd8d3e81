#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vstar/field.hpp"

namespace vstar {

using Matrix = std::vector<std::vector<FieldElement>>;

/// Rank by Gaussian elimination over `k`. The matrix is taken by value and
/// reduced in place.
inline std::size_t rank(Matrix m, const Field& k) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].rep == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const FieldElement inv = k.inv(m[r][c]);
    for (auto& v : m[r]) v = k.mul(v, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].rep == 0) continue;
      const FieldElement f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

/// Dimension of the solution space of m·x = 0.
inline std::size_t nullity(const Matrix& m, std::size_t unknowns, const Field& k) {
  return unknowns - rank(m, k);
}

}  // namespace vstar
