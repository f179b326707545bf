#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "psdrank/exact/matrix.hpp"

namespace psdrank {

namespace detail {

template <typename T>
void swap_rows(Matrix<T>& a, std::size_t r, std::size_t s) {
  if (r == s) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(s, j));
}

// Fraction-free forward elimination in place. Returns the rank; `sign`
// receives the parity of the row swaps, `last_pivot` the final leading
// pivot (for square full-rank input this is the determinant up to sign).
template <typename T>
std::size_t bareiss_forward(Matrix<T>& a, int& sign, T& last_pivot) {
  T prev(1);
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      swap_rows(a, r, p);
      sign = -sign;
    }
    const T pivot = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const T lead = a(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        T v = pivot * a(i, j);
        if (!is_zero(lead)) v -= lead * a(r, j);
        a(i, j) = v / prev;
      }
      a(i, c) = T{};
    }
    prev = pivot;
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace detail

// Exact rank by Bareiss fraction-free elimination.
template <typename T>
std::size_t rank(Matrix<T> m) {
  int sign = 1;
  T last{};
  return detail::bareiss_forward(m, sign, last);
}

template <typename T>
T det(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("det: matrix not square");
  if (m.rows() == 0) return T(1);
  int sign = 1;
  T last{};
  const std::size_t r = detail::bareiss_forward(m, sign, last);
  if (r < m.rows()) return T{};
  return sign < 0 ? -last : last;
}

// Reduced row echelon form with zero rows dropped. `pivots` receives the
// pivot column of each returned row.
template <typename T>
Matrix<T> rref(Matrix<T> a, std::vector<std::size_t>* pivots = nullptr) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    detail::swap_rows(a, r, p);
    const T inv = T(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<T> data(a.data().begin(), a.data().begin() + static_cast<std::ptrdiff_t>(r * a.cols()));
  if (pivots) *pivots = std::move(piv);
  return Matrix<T>(r, a.cols(), std::move(data));
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  std::vector<std::size_t> piv;
  Matrix<T> red = rref(std::move(aug), &piv);
  if (red.rows() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

}  // namespace psdrank
