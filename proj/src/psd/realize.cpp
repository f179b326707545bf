#include "psdrank/psd/realize.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "psdrank/pattern/pattern.hpp"

namespace psdrank {

namespace {

std::vector<Rational> times_vector(const ExactMatrix& a, const std::vector<std::int64_t>& v) {
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (v[j] != 0 && !a(i, j).is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

}  // namespace

RealizeResult realize_support(const PsdFactorization& f, const RealizeOptions& options) {
  for (const auto* side : {&f.A, &f.B})
    for (const auto& x : *side) {
      if (x.rows() != f.order || x.cols() != f.order)
        throw std::invalid_argument("realize_support: factor is not order x order");
      if (!is_psd(x)) throw std::invalid_argument("realize_support: factor is not positive semidefinite");
    }

  const std::size_t m = f.rows();
  const std::size_t n = f.cols();
  const SupportPattern target = support(f.product());

  RealizeResult r;
  r.sample_bound = options.sample_bound.value_or(std::max<std::int64_t>(17, static_cast<std::int64_t>(m * n)));
  if (r.sample_bound < 1) throw std::invalid_argument("realize_support: sample bound must be positive");
  const auto width = static_cast<std::uint64_t>(2 * r.sample_bound + 1);

  // mt19937_64 is fully specified by the standard, so reducing its raw
  // output keeps samples identical across standard libraries.
  std::mt19937_64 rng(options.seed);
  auto draw = [&] { return static_cast<std::int64_t>(rng() % width) - r.sample_bound; };

  for (int attempt = 1; attempt <= options.max_tries; ++attempt) {
    r.tries = attempt;
    r.xi.assign(m, std::vector<std::int64_t>(f.order));
    r.eta.assign(n, std::vector<std::int64_t>(f.order));
    for (auto& v : r.xi)
      for (auto& x : v) x = draw();
    for (auto& v : r.eta)
      for (auto& x : v) x = draw();

    std::vector<std::vector<Rational>> left(m);
    std::vector<std::vector<Rational>> right(n);
    for (std::size_t k = 0; k < m; ++k) left[k] = times_vector(f.A[k], r.xi[k]);
    for (std::size_t l = 0; l < n; ++l) right[l] = times_vector(f.B[l], r.eta[l]);

    r.T = ExactMatrix(m, n);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < f.order; ++i) r.T(k, l) += left[k][i] * right[l][i];

    if (support(r.T) == target) {
      r.success = true;
      return r;
    }
  }
  return r;
}

}  // namespace psdrank
