#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "psdrank/psd/factorization.hpp"

namespace psdrank {

// Symmetric floating-point matrix, psd up to `tolerance`.
struct FloatPsdMatrix {
  Eigen::MatrixXd entries;
  double tolerance = 1e-9;

  std::size_t order() const { return static_cast<std::size_t>(entries.rows()); }
};

// tr(matrix^T X) = value. Only the symmetric part of `matrix` matters.
struct LinearConstraint {
  Eigen::MatrixXd matrix;
  double value = 0.0;
};

struct ReductionOptions {
  // Eigenvalues above rank_tol * max(1, lambda_max) count toward the rank.
  double rank_tol = 1e-9;
  double residual_tol = 1e-6;
  // Boundary step tie tolerance on the eigenvalues of the direction.
  double tie_tol = 1e-9;
  std::size_t max_iterations = 1000;
};

struct ReductionReport {
  Eigen::MatrixXd X;
  std::size_t initial_rank = 0;
  std::size_t final_rank = 0;
  std::vector<std::size_t> rank_history;
  std::vector<double> residual_history;
  double max_residual = 0.0;
  double min_eigenvalue = 0.0;
  std::size_t iterations = 0;
};

struct ReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest r with r(r+1)/2 <= m.
std::size_t rank_bound(std::size_t constraint_count);

std::size_t numerical_rank(const Eigen::MatrixXd& x, double rank_tol);
double max_residual(const Eigen::MatrixXd& x, const std::vector<LinearConstraint>& constraints);

// Moves X inside {X psd : tr(A_j X) = alpha_j} to the boundary of the psd
// cone until its rank r satisfies r(r+1)/2 <= m. Each step factors
// X = G G^T (G of full column rank r), takes a nonzero symmetric D with
// <G^T A_j G, D> = 0 for all j, and sets X <- G (I + t D) G^T with t chosen
// so that I + t D is singular and psd. Throws ReductionError if X is not psd,
// the constraints are not met, or no direction is found.
ReductionReport barvinok_reduce(const FloatPsdMatrix& x, const std::vector<LinearConstraint>& constraints,
                                const ReductionOptions& options = {});

struct FloatFactorization {
  std::size_t order = 0;
  std::vector<Eigen::MatrixXd> A;
  std::vector<Eigen::MatrixXd> B;
};

FloatFactorization to_float(const PsdFactorization& f);
Eigen::MatrixXd to_float(const ExactMatrix& m);

struct FactorRankReport {
  FloatFactorization factorization;
  std::vector<std::size_t> a_ranks;
  std::vector<std::size_t> b_ranks;
  std::size_t a_bound = 0;  // rank_bound(n)
  std::size_t b_bound = 0;  // rank_bound(m)
  double max_residual = 0.0;
  double min_eigenvalue = 0.0;
  bool within_bounds = false;
};

// Reduces each A_k against the constraints tr(A_k B_l) = S(k, l) with B
// fixed, then each B_l against the updated A.
FactorRankReport reduce_factor_ranks(const FloatFactorization& f, const Eigen::MatrixXd& s,
                                     const ReductionOptions& options = {});

}  // namespace psdrank
