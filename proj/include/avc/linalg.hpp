// Copyright 2026 The avc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AVC_LINALG_HPP_
#define AVC_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "avc/error.hpp"
#include "avc/gf.hpp"

namespace avc {

// Row-major dense matrix over a field.
using Matrix = std::vector<Vec>;

inline Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, Vec(cols)); }

inline Matrix identity_matrix(const Field& f, std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

inline Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t = zero_matrix(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw DomainError("matrix shapes do not match");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix r = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) r[i][j] = f.add(r[i][j], f.mul(a[i][k], b[k][j]));
    }
  return r;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(const Field& f, Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    Elem inv = f.inv(a[row][col]);
    for (std::size_t j = col; j < cols; ++j)
      if (!a[row][j].is_zero()) a[row][j] = f.mul(a[row][j], inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Elem factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!a[row][j].is_zero()) a[i][j] = f.sub(a[i][j], f.mul(factor, a[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(const Field& f, Matrix a) { return row_reduce(f, a).size(); }

// Some x with a x = b, or nothing when the system is inconsistent.
inline std::optional<Vec> solve(const Field& f, const Matrix& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("right-hand side has wrong length");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(f, aug);
  Vec x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;
    x[pivots[r]] = aug[r][cols];
  }
  return x;
}

inline std::optional<Matrix> inverse(const Field& f, const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return Matrix{};
  Matrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw DomainError("inverse needs a square matrix");
    aug[i].resize(2 * n);
    aug[i][n + i] = f.one();
  }
  auto pivots = row_reduce(f, aug);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  Matrix inv = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace avc

#endif  // AVC_LINALG_HPP_
