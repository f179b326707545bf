#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psdrank/psd/factorization.hpp"

namespace psdrank {

struct RealizeOptions {
  std::uint64_t seed = 1;
  int max_tries = 5;
  // Entries of xi_k, eta_l are drawn from {-B..B}; default B = max(17, m*n).
  std::optional<std::int64_t> sample_bound;
};

struct RealizeResult {
  bool success = false;
  int tries = 0;
  std::int64_t sample_bound = 0;
  ExactMatrix T;
  std::vector<std::vector<std::int64_t>> xi;
  std::vector<std::vector<std::int64_t>> eta;
};

// T(k, l) = <A_k xi_k, B_l eta_l> for random integer vectors; resamples
// until supp(T) = supp(S_F). Zero entries of S_F are zero in every sample
// because tr(A_k B_l) = 0 forces A_k B_l = 0 for psd factors. rank(T) <= q
// because T factors through Q^q. Throws std::invalid_argument if a factor
// is not psd.
RealizeResult realize_support(const PsdFactorization& f, const RealizeOptions& options = {});

}  // namespace psdrank
