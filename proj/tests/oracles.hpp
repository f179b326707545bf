#pragma once

// Test-only reference implementations. These follow the textbook
// definitions directly and share no code with the library routines they
// check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "psdrank/exact/matrix.hpp"
#include "psdrank/pattern/pattern.hpp"

namespace psdrank::oracle {

// Plain Gaussian elimination with division over Q.
inline std::size_t naive_rank(ExactMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// Longest sequence (k_1, l_1), ..., (k_t, l_t) of distinct rows and columns
// with M(k_i, l_i) = 1 and M(k_i, l_j) = 0 for all j < i, by exhaustive
// search over all index sequences.
inline std::size_t exhaustive_triangular_rank(const SupportPattern& m) {
  std::vector<std::size_t> ks;
  std::vector<std::size_t> ls;
  std::vector<bool> row_used(m.rows(), false);
  std::vector<bool> col_used(m.cols(), false);
  std::size_t best = 0;
  std::function<void()> extend = [&] {
    best = std::max(best, ks.size());
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (row_used[k]) continue;
      bool zero_before = true;
      for (auto l : ls) zero_before = zero_before && !m.get(k, l);
      if (!zero_before) continue;
      for (std::size_t l = 0; l < m.cols(); ++l) {
        if (col_used[l] || !m.get(k, l)) continue;
        row_used[k] = col_used[l] = true;
        ks.push_back(k);
        ls.push_back(l);
        extend();
        ks.pop_back();
        ls.pop_back();
        row_used[k] = col_used[l] = false;
      }
    }
  };
  extend();
  return best;
}

// Minimum number of all-`allowed` rectangles covering all target cells, by
// enumerating every row subset, taking its maximal column set, and trying
// all k-subsets of the resulting rectangles for k = 0, 1, 2, ...
// Cells are indexed i * cols + j; patterns must have at most 64 cells and
// 16 rows.
inline std::size_t brute_force_cover(const SupportPattern& allowed, const SupportPattern& targets) {
  const std::size_t m = allowed.rows();
  const std::size_t n = allowed.cols();
  std::uint64_t target_mask = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (targets.get(i, j)) target_mask |= std::uint64_t{1} << (i * n + j);
  if (target_mask == 0) return 0;

  std::vector<std::uint64_t> rects;
  for (std::uint32_t rows = 1; rows < (1U << m); ++rows) {
    std::vector<bool> cols(n, true);
    for (std::size_t i = 0; i < m; ++i)
      if (rows >> i & 1U)
        for (std::size_t j = 0; j < n; ++j) cols[j] = cols[j] && allowed.get(i, j);
    std::uint64_t cells = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (rows >> i & 1U)
        for (std::size_t j = 0; j < n; ++j)
          if (cols[j]) cells |= std::uint64_t{1} << (i * n + j);
    cells &= target_mask;
    if (cells) rects.push_back(cells);
  }
  std::sort(rects.begin(), rects.end());
  rects.erase(std::unique(rects.begin(), rects.end()), rects.end());

  for (std::size_t k = 1;; ++k) {
    std::function<bool(std::size_t, std::size_t, std::uint64_t)> search = [&](std::size_t start, std::size_t left,
                                                                            std::uint64_t covered) {
      if (covered == target_mask) return true;
      if (left == 0) return false;
      for (std::size_t r = start; r < rects.size(); ++r)
        if (search(r + 1, left - 1, covered | rects[r])) return true;
      return false;
    };
    if (search(0, k, 0)) return k;
  }
}

inline std::size_t brute_force_boolean_rank(const SupportPattern& m) { return brute_force_cover(m, m); }

inline SupportPattern random_pattern(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution one(density);
  SupportPattern p(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) p.set(i, j, one(rng));
  return p;
}

// Random rational matrix up to max_dim x max_dim with each entry zero with
// probability 1/3. Some rows are scaled copies of earlier rows so that the
// rank is often below min(m, n).
inline ExactMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t max_dim = 6) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> zero(0, 2);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<int> copy(0, 3);
  const std::size_t m = dim(rng);
  const std::size_t n = dim(rng);
  ExactMatrix s(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && copy(rng) == 0) {
      std::uniform_int_distribution<std::size_t> src(0, i - 1);
      const std::size_t from = src(rng);
      int f = 0;
      while (f == 0) f = num(rng);
      for (std::size_t j = 0; j < n; ++j) s(i, j) = s(from, j) * f;
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (zero(rng) == 0) continue;
      int p = 0;
      while (p == 0) p = num(rng);
      s(i, j) = Rational(p, den(rng));
    }
  }
  return s;
}

// The 6 x 6 matrix displayed for the S_n family.
inline ExactMatrix displayed_s6() {
  return ExactMatrix{{1, 3, 6, 10, 15, 21}, {0, 1, 3, 6, 10, 15}, {0, 0, 1, 3, 6, 10},
                     {1, 0, 0, 1, 3, 6},    {3, 1, 0, 0, 1, 3},    {6, 3, 1, 0, 0, 1}};
}

}  // namespace psdrank::oracle
