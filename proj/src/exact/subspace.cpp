#include "psdrank/exact/subspace.hpp"

#include <stdexcept>

#include "psdrank/exact/elimination.hpp"

namespace psdrank {

Subspace Subspace::span(const ExactMatrix& generators) {
  Subspace s(generators.cols());
  s.basis_ = rref(generators, &s.pivots_);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const std::vector<Rational>> vectors) {
  ExactMatrix g(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw std::invalid_argument("Subspace::span: vector length mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) g(i, j) = vectors[i][j];
  }
  return span(g);
}

bool Subspace::contains_vector(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Subspace::contains_vector: dimension mismatch");
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Rational f = w[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) w[j] -= f * basis_(i, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("Subspace::contains: ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains_vector(other.basis_.row(i))) return false;
  return true;
}

bool contains(const Subspace& a, const Subspace& b) { return a.contains(b); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient dimension mismatch");
  ExactMatrix g(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(a.dim() + i, j) = b.basis()(i, j);
  return Subspace::span(g);
}

Subspace kernel(const ExactMatrix& m) {
  std::vector<std::size_t> piv;
  const ExactMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Rational>> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -r(i, f);
    vecs.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), vecs);
}

Subspace image(const ExactMatrix& m) { return Subspace::span(m.transpose()); }

ExactMatrix projection_matrix(const Subspace& u) {
  const std::size_t q = u.ambient_dim();
  if (u.dim() == 0) return ExactMatrix(q, q);
  const ExactMatrix& b = u.basis();
  const ExactMatrix bt = b.transpose();
  return bt * inverse(b * bt) * b;
}

}  // namespace psdrank
