#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "psdrank/exact/matrix.hpp"

namespace psdrank {

// Signs for the nonzero entries of a submatrix, listed row-major in the
// coordinates of the full matrix. negative[i] flips the root at positions[i].
struct SignAssignment {
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  std::vector<bool> negative;
};

struct SqrtRankOptions {
  std::size_t cap = 24;
  // Fix the sign of the first nonzero entry; Y and -Y have the same rank.
  bool fix_sign = true;
  unsigned threads = 1;
};

struct SqrtRankResult {
  std::size_t min_rank = 0;
  SignAssignment witness;
  MultiQuadMatrix witness_matrix;
  std::uint64_t assignments_checked = 0;
  std::map<std::size_t, std::uint64_t> rank_histogram;
  // Primes p whose sqrt(p) generate the field the roots live in.
  std::vector<std::uint64_t> generators;
};

struct EnumerationCapExceeded : std::length_error {
  using std::length_error::length_error;
};

// Minimum exact rank of Y over all Y with Y(k, l) = +-sqrt(S(k, l)) on the
// selected rows and columns. Every sign pattern is enumerated; zeros stay
// zero. Ties are broken by the lexicographically smallest sign vector
// (+ before -), so the witness does not depend on `threads`.
// Throws std::invalid_argument on a negative entry and
// EnumerationCapExceeded if the submatrix has more than `cap` nonzeros.
SqrtRankResult min_sqrt_rank(const ExactMatrix& s, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols, const SqrtRankOptions& options = {});

// The signed root matrix for one assignment.
MultiQuadMatrix signed_root_matrix(const ExactMatrix& s, const std::vector<std::size_t>& rows,
                                   const std::vector<std::size_t>& cols, const SignAssignment& signs);

}  // namespace psdrank
