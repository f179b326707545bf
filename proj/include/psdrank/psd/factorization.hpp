#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "psdrank/exact/matrix.hpp"

namespace psdrank {

// Order-q psd factorization: S(k, l) = tr(A_k B_l) with symmetric psd
// q x q factors. Psd-ness is certified on demand, not on construction.
struct PsdFactorization {
  std::size_t order = 0;
  std::vector<ExactMatrix> A;
  std::vector<ExactMatrix> B;

  std::size_t rows() const { return A.size(); }
  std::size_t cols() const { return B.size(); }

  // The matrix S_F(k, l) = tr(A_k B_l) this factorization represents.
  ExactMatrix product() const;
};

// Exact LDL^T with diagonal pivoting. `psd` is true iff the matrix is
// symmetric and elimination only meets nonnegative pivots, where a zero
// diagonal forces the remaining row and column to vanish.
struct PsdCertificate {
  bool psd = false;
  std::vector<Rational> pivots;
};

PsdCertificate psd_certificate(const ExactMatrix& m);
inline bool is_psd(const ExactMatrix& m) { return psd_certificate(m).psd; }

struct FactorizationReport {
  std::vector<bool> a_psd;
  std::vector<bool> b_psd;
  // Entries with tr(A_k B_l) != S(k, l).
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;
  bool passed = false;
};

// Throws std::invalid_argument on shape mismatch.
FactorizationReport verify_psd_factorization(const PsdFactorization& f, const ExactMatrix& s);

}  // namespace psdrank
