#include "psdrank/psd/barvinok.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace psdrank {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd symmetrized(const MatrixXd& m) { return 0.5 * (m + m.transpose()); }

double rank_threshold(const VectorXd& eigenvalues, double rank_tol) {
  const double top = eigenvalues.size() ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return rank_tol * std::max(1.0, top);
}

// Symmetric r x r matrix from coordinates on the basis E_aa, E_ab + E_ba.
MatrixXd unpack_symmetric(const VectorXd& v, Eigen::Index r) {
  MatrixXd d(r, r);
  Eigen::Index idx = 0;
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index b = a; b < r; ++b) {
      d(a, b) = v(idx);
      d(b, a) = v(idx);
      ++idx;
    }
  return d;
}

}  // namespace

std::size_t rank_bound(std::size_t constraint_count) {
  std::size_t r = 0;
  while ((r + 1) * (r + 2) / 2 <= constraint_count) ++r;
  return r;
}

std::size_t numerical_rank(const MatrixXd& x, double rank_tol) {
  if (x.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(symmetrized(x), Eigen::EigenvaluesOnly);
  const VectorXd& ev = es.eigenvalues();
  const double thr = rank_threshold(ev, rank_tol);
  return static_cast<std::size_t>((ev.array() > thr).count());
}

double max_residual(const MatrixXd& x, const std::vector<LinearConstraint>& constraints) {
  double worst = 0.0;
  for (const auto& c : constraints) worst = std::max(worst, std::abs((c.matrix.transpose() * x).trace() - c.value));
  return worst;
}

ReductionReport barvinok_reduce(const FloatPsdMatrix& input, const std::vector<LinearConstraint>& constraints,
                                const ReductionOptions& options) {
  const Eigen::Index q = input.entries.rows();
  if (input.entries.cols() != q) throw ReductionError("barvinok_reduce: matrix is not square");
  for (const auto& c : constraints)
    if (c.matrix.rows() != q || c.matrix.cols() != q) throw ReductionError("barvinok_reduce: constraint shape mismatch");

  MatrixXd x = symmetrized(input.entries);
  {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(x, Eigen::EigenvaluesOnly);
    const double lo = q ? es.eigenvalues().minCoeff() : 0.0;
    const double scale = q ? std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()) : 1.0;
    if (lo < -input.tolerance * scale)
      throw ReductionError("barvinok_reduce: input is not psd (minimum eigenvalue " + std::to_string(lo) + ")");
  }
  const double initial_residual = max_residual(x, constraints);
  if (initial_residual > options.residual_tol)
    throw ReductionError("barvinok_reduce: input violates the constraints (residual " +
                         std::to_string(initial_residual) + ")");

  std::vector<MatrixXd> sym;
  sym.reserve(constraints.size());
  for (const auto& c : constraints) sym.push_back(symmetrized(c.matrix));
  const std::size_t m = constraints.size();

  ReductionReport report;
  for (std::size_t iter = 0;; ++iter) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(x);
    const VectorXd& ev = es.eigenvalues();
    const double thr = rank_threshold(ev, options.rank_tol);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (ev(i) > thr) keep.push_back(i);
    const auto r = static_cast<Eigen::Index>(keep.size());
    MatrixXd g(q, r);
    for (Eigen::Index c = 0; c < r; ++c) g.col(c) = es.eigenvectors().col(keep[c]) * std::sqrt(ev(keep[c]));
    x = g * g.transpose();

    report.rank_history.push_back(static_cast<std::size_t>(r));
    report.residual_history.push_back(max_residual(x, constraints));
    if (iter == 0) report.initial_rank = static_cast<std::size_t>(r);
    if (report.residual_history.back() > options.residual_tol)
      throw ReductionError("barvinok_reduce: residual " + std::to_string(report.residual_history.back()) +
                           " exceeds tolerance after iteration " + std::to_string(iter));

    const auto ur = static_cast<std::size_t>(r);
    if (ur * (ur + 1) / 2 <= m) break;
    if (iter >= options.max_iterations) throw ReductionError("barvinok_reduce: iteration limit reached");

    const Eigen::Index dim = r * (r + 1) / 2;
    VectorXd direction;
    if (m == 0) {
      direction = VectorXd::Zero(dim);
      direction(0) = 1.0;
    } else {
      MatrixXd system(static_cast<Eigen::Index>(m), dim);
      for (std::size_t j = 0; j < m; ++j) {
        const MatrixXd c = g.transpose() * sym[j] * g;
        Eigen::Index idx = 0;
        for (Eigen::Index a = 0; a < r; ++a)
          for (Eigen::Index b = a; b < r; ++b) system(static_cast<Eigen::Index>(j), idx++) = a == b ? c(a, a) : 2.0 * c(a, b);
      }
      Eigen::JacobiSVD<MatrixXd> svd(system, Eigen::ComputeFullV);
      direction = svd.matrixV().col(dim - 1);
      const double scale = std::max(1.0, system.cwiseAbs().maxCoeff());
      if ((system * direction).norm() > 1e-8 * scale)
        throw ReductionError("barvinok_reduce: no constraint-preserving direction (residual " +
                             std::to_string((system * direction).norm()) + ", rank " + std::to_string(r) + ", " +
                             std::to_string(m) + " constraints)");
    }

    MatrixXd delta = unpack_symmetric(direction, r);
    delta /= delta.norm();
    Eigen::SelfAdjointEigenSolver<MatrixXd> ds(delta, Eigen::EigenvaluesOnly);
    const double lmin = ds.eigenvalues().minCoeff();
    const double lmax = ds.eigenvalues().maxCoeff();
    double t = 0.0;
    if (lmin < -options.tie_tol) {
      t = -1.0 / lmin;
    } else if (lmax > options.tie_tol) {
      delta = -delta;
      t = 1.0 / lmax;
    } else {
      throw ReductionError("barvinok_reduce: degenerate direction");
    }

    // I + tD is psd with a zero eigenvalue; clip rounding noise before
    // mapping back so the iterate stays psd.
    MatrixXd step = MatrixXd::Identity(r, r) + t * delta;
    Eigen::SelfAdjointEigenSolver<MatrixXd> ss(symmetrized(step));
    VectorXd sev = ss.eigenvalues();
    for (Eigen::Index i = 0; i < sev.size(); ++i)
      if (sev(i) < options.tie_tol) sev(i) = 0.0;
    step = ss.eigenvectors() * sev.asDiagonal() * ss.eigenvectors().transpose();
    x = symmetrized(g * step * g.transpose());
    ++report.iterations;
  }

  report.X = x;
  report.final_rank = report.rank_history.back();
  report.max_residual = max_residual(x, constraints);
  if (q > 0) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(x, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = es.eigenvalues().minCoeff();
  }
  return report;
}

FactorRankReport reduce_factor_ranks(const FloatFactorization& f, const MatrixXd& s, const ReductionOptions& options) {
  const std::size_t m = f.A.size();
  const std::size_t n = f.B.size();
  if (static_cast<std::size_t>(s.rows()) != m || static_cast<std::size_t>(s.cols()) != n)
    throw ReductionError("reduce_factor_ranks: matrix shape does not match the factorization");

  FactorRankReport report;
  report.factorization = f;
  auto& A = report.factorization.A;
  auto& B = report.factorization.B;
  report.a_bound = rank_bound(n);
  report.b_bound = rank_bound(m);

  for (std::size_t k = 0; k < m; ++k) {
    std::vector<LinearConstraint> cons;
    for (std::size_t l = 0; l < n; ++l) cons.push_back({B[l], s(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l))});
    A[k] = barvinok_reduce({A[k], 1e-9}, cons, options).X;
  }
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<LinearConstraint> cons;
    for (std::size_t k = 0; k < m; ++k) cons.push_back({A[k], s(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l))});
    B[l] = barvinok_reduce({B[l], 1e-9}, cons, options).X;
  }

  report.within_bounds = true;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& a : A) {
    report.a_ranks.push_back(numerical_rank(a, options.rank_tol));
    report.within_bounds = report.within_bounds && report.a_ranks.back() <= report.a_bound;
    if (a.size()) report.min_eigenvalue = std::min(report.min_eigenvalue, Eigen::SelfAdjointEigenSolver<MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues().minCoeff());
  }
  for (const auto& b : B) {
    report.b_ranks.push_back(numerical_rank(b, options.rank_tol));
    report.within_bounds = report.within_bounds && report.b_ranks.back() <= report.b_bound;
    if (b.size()) report.min_eigenvalue = std::min(report.min_eigenvalue, Eigen::SelfAdjointEigenSolver<MatrixXd>(b, Eigen::EigenvaluesOnly).eigenvalues().minCoeff());
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < n; ++l)
      report.max_residual = std::max(report.max_residual,
                                     std::abs((A[k] * B[l]).trace() - s(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l))));
  if (!std::isfinite(report.min_eigenvalue)) report.min_eigenvalue = 0.0;
  return report;
}

Eigen::MatrixXd to_float(const ExactMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(m(i, j));
  return out;
}

FloatFactorization to_float(const PsdFactorization& f) {
  FloatFactorization out;
  out.order = f.order;
  for (const auto& a : f.A) out.A.push_back(to_float(a));
  for (const auto& b : f.B) out.B.push_back(to_float(b));
  return out;
}

}  // namespace psdrank
