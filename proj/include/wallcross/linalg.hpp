#pragma once

#include "wallcross/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace wc {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }
inline bool is_zero_value(const LaurentPoly& x) { return x.is_zero(); }

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
  Matrix<T> m(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<T> c(n, std::vector<T>(m, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero_value(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!is_zero_value(b[l][j])) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.empty()) return {};
  Matrix<T> t(a[0].size(), std::vector<T>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Solves a X = b by Gauss-Jordan elimination; nullopt if a is singular.
template <class T>
std::optional<Matrix<T>> solve(Matrix<T> a, Matrix<T> b) {
  std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero_value(a[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    T inv = T(1) / a[col][col];
    for (auto& x : a[col]) x = x * inv;
    for (auto& x : b[col]) x = x * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero_value(a[r][col])) continue;
      T f = a[r][col];
      for (std::size_t j = col; j < n; ++j)
        if (!is_zero_value(a[col][j])) a[r][j] -= f * a[col][j];
      for (std::size_t j = 0; j < b[r].size(); ++j)
        if (!is_zero_value(b[col][j])) b[r][j] -= f * b[col][j];
    }
  }
  return b;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  auto r = solve(a, identity_matrix<T>(a.size()));
  if (!r) throw std::domain_error("singular matrix");
  return *r;
}

// Row-reduces in place and returns the rank.
template <class T>
std::size_t rank(Matrix<T> a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero_value(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero_value(a[i][c])) continue;
      T f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace wc
