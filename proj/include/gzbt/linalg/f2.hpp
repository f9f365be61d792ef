#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gzbt::linalg {

/// Solves A x = b over GF(2). Rows of A are 0/1 vectors of equal length.
inline std::optional<std::vector<std::uint8_t>> solve_f2(std::vector<std::vector<std::uint8_t>> a,
                                                         std::vector<std::uint8_t> b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && !a[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i][c]) {
        for (std::size_t j = c; j < cols; ++j) a[i][j] ^= a[r][j];
        b[i] ^= b[r];
      }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i]) return std::nullopt;
  std::vector<std::uint8_t> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace gzbt::linalg
