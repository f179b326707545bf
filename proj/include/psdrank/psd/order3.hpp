#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psdrank/psd/sqrt_rank.hpp"

namespace psdrank {

struct Order3Options {
  std::size_t cap = 24;
  bool fix_sign = true;
  unsigned threads = 1;
  // Restrict the argument to a submatrix (0-based indices into S). A psd
  // factorization of S restricts to every submatrix, so a bound for the
  // submatrix is a bound for S.
  std::optional<std::vector<std::size_t>> rows;
  std::optional<std::vector<std::size_t>> cols;
};

// Why a row (or column) of an order-3 factorization is forced to carry a
// rank-1 factor.
//
// Row k: its subspace U_k = img A_k is nonzero when the row has a nonzero.
// If the row is zero at two columns l, l' that both contain a nonzero (so
// dim V_l, dim V_l' <= 2) and whose zero patterns differ, then dim U_k = 2
// would force V_l = U_k = V_l', which the differing patterns rule out. Hence
// dim U_k = 1 and A_k has rank 1. Columns are symmetric with V_l = ker B_l
// forced to dimension 2.
struct LineCheck {
  std::size_t index = 0;
  bool has_nonzero = false;
  std::optional<std::pair<std::size_t, std::size_t>> distinct_zero_pair;
  bool forced_rank_one = false;
};

struct Order3Certificate {
  bool conclusive = false;
  std::size_t bound = 0;  // psd rank >= bound when conclusive
  std::string claim;
  std::string reason;
  std::vector<std::size_t> scope_rows;
  std::vector<std::size_t> scope_cols;
  std::vector<std::size_t> rows;  // K
  std::vector<std::size_t> cols;  // L
  std::vector<LineCheck> row_checks;
  std::vector<LineCheck> col_checks;
  std::optional<SqrtRankResult> enumeration;
};

// Attempts to certify psdrank(S) >= 4. Assuming an order-3 factorization,
// the rows in K and columns in L carry rank-1 factors u_k u_k^T and
// v_l v_l^T, so Y(k, l) = <u_k, v_l> has rank <= 3 and Y(k, l)^2 = S(k, l).
// If every signed square root of S[K, L] has rank >= 4 no such
// factorization exists. Returns an inconclusive certificate otherwise.
Order3Certificate order3_exclusion(const ExactMatrix& s, const Order3Options& options = {});

// The n x n matrix S_n(i, j) = (i - j - 1)(i - j - 2) / 2, 1-based.
ExactMatrix generate_sn(std::size_t n);

}  // namespace psdrank
