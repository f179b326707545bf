#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "psdrank/pattern/pattern.hpp"

namespace psdrank {

struct TriangularResult {
  std::size_t rank = 0;
  // (row, column) pairs in order; entry (k_i, l_j) is 0 for every j > i and
  // (k_i, l_i) is 1, so the selected submatrix is lower triangular.
  std::vector<std::pair<std::size_t, std::size_t>> sequence;
};

// Largest t such that some t x t submatrix permutes to lower-triangular
// form with a nonzero diagonal.
TriangularResult triangular_rank_with_witness(const SupportPattern& m);
std::size_t triangular_rank(const SupportPattern& m);

}  // namespace psdrank
