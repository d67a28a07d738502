#pragma once

// Exact integer linear algebra on tiny dense matrices (dimension <= 9,
// entries bounded by root coefficients). Fraction-free elimination keeps
// everything in integers; __int128 intermediates rule out overflow.

#include <cstdint>
#include <optional>
#include <vector>

#include "aslw/errors.hpp"

namespace aslw {

using Vec = std::vector<int64_t>;
using Mat = std::vector<Vec>;  // row-major

namespace linalg {

inline int64_t narrow(__int128 v) {
  require(v <= INT64_MAX && v >= INT64_MIN, "integer overflow in exact elimination");
  return static_cast<int64_t>(v);
}

// Fraction-free (Bareiss) row reduction; returns rank. Mutates a copy.
inline int rank(Mat m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int64_t prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        __int128 num = static_cast<__int128>(m[r][c]) * m[i][j] -
                       static_cast<__int128>(m[i][c]) * m[r][j];
        require(num % prev == 0, "Bareiss division not exact");
        m[i][j] = narrow(num / prev);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline bool in_span(const Mat& basis, const Vec& target) {
  Mat with = basis;
  with.push_back(target);
  return rank(basis) == rank(with);
}

inline int64_t det(Mat m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  require(static_cast<int>(m[0].size()) == n, "det needs a square matrix");
  int64_t prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) return 0;
    if (pivot != c) { std::swap(m[c], m[pivot]); sign = -sign; }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(m[c][c]) * m[i][j] -
                       static_cast<__int128>(m[i][c]) * m[c][j];
        require(num % prev == 0, "Bareiss division not exact");
        m[i][j] = narrow(num / prev);
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

// Solve sum_j c_j * basis[j] = target for integer c_j; basis must be square
// and invertible (columns = basis vectors). Returns nullopt if the exact
// rational solution is not integral.
inline std::optional<Vec> solve_integer(const Mat& basis, const Vec& target) {
  int n = static_cast<int>(basis.size());
  require(n > 0 && static_cast<int>(basis[0].size()) == n, "solve_integer needs a square basis");
  Mat cols(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cols[i][j] = basis[j][i];
  int64_t d = det(cols);
  require(d != 0, "solve_integer: singular basis");
  Vec out(n);
  for (int j = 0; j < n; ++j) {
    Mat rep = cols;
    for (int i = 0; i < n; ++i) rep[i][j] = target[i];
    int64_t dj = det(rep);
    if (dj % d != 0) return std::nullopt;
    out[j] = dj / d;
  }
  return out;
}

}  // namespace linalg
}  // namespace aslw
