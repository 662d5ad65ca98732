#pragma once

#include "rayclass/rational.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace rayclass {

inline int sgn(const Rat& q) {
  return q > 0 ? 1 : (q < 0 ? -1 : 0);
}

// Exact dense linear algebra over a field K (rationals, or real quadratic
// values). Matrices are given by their columns; everything is tiny (n <= 4),
// so plain Gaussian elimination with exact division is fine.
template <class K>
using VecK = std::vector<K>;

template <class K>
K dot(const VecK<K>& a, const VecK<K>& b) {
  assert(a.size() == b.size());
  K s{};
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

template <class K>
K det_cols(const std::vector<VecK<K>>& cols) {
  const std::size_t n = cols.size();
  assert(n > 0 && cols[0].size() == n);
  std::vector<VecK<K>> m(n, VecK<K>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
  K det = K(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == K(0)) ++p;
    if (p == n) return K(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = K(0) - det;
    }
    det = det * m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == K(0)) continue;
      K f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
    }
  }
  return det;
}

// Solve sum_j a_j cols[j] = b exactly; nullopt when the columns are
// dependent or the (possibly overdetermined) system is inconsistent.
template <class K>
std::optional<VecK<K>> solve_cols(const std::vector<VecK<K>>& cols,
                                  const VecK<K>& b) {
  const std::size_t n = b.size(), d = cols.size();
  assert(d <= n);
  for (const auto& c : cols) assert(c.size() == n);
  std::vector<VecK<K>> m(n, VecK<K>(d + 1));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
  for (std::size_t i = 0; i < n; ++i) m[i][d] = b[i];

  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = row;
    while (p < n && m[p][c] == K(0)) ++p;
    if (p == n) return std::nullopt;  // dependent columns
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][c] == K(0)) continue;
      K f = m[r][c] / m[row][c];
      for (std::size_t j = c; j <= d; ++j) m[r][j] = m[r][j] - f * m[row][j];
    }
    pivot_row[c] = row;
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (m[r][d] != K(0)) return std::nullopt;
  VecK<K> x(d);
  for (std::size_t c = 0; c < d; ++c)
    x[c] = m[pivot_row[c]][d] / m[pivot_row[c]][c];
  return x;
}

template <class K>
std::size_t rank_cols(const std::vector<VecK<K>>& cols) {
  if (cols.empty()) return 0;
  std::vector<VecK<K>> m = cols;  // rows of the transpose
  const std::size_t rows = m.size(), n = m[0].size();
  std::size_t r = 0;
  for (std::size_t lead = 0; lead < n && r < rows; ++lead) {
    std::size_t p = r;
    while (p < rows && m[p][lead] == K(0)) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t k = r + 1; k < rows; ++k) {
      if (m[k][lead] == K(0)) continue;
      K f = m[k][lead] / m[r][lead];
      for (std::size_t j = lead; j < n; ++j) m[k][j] = m[k][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace rayclass
