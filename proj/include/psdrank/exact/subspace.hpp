#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "psdrank/exact/matrix.hpp"

namespace psdrank {

// Linear subspace of Q^q, stored as the reduced row echelon form of a row
// basis. The RREF is canonical, so equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  // Row span of `generators` (a k x q matrix).
  static Subspace span(const ExactMatrix& generators);
  static Subspace span(std::size_t ambient_dim, std::span<const std::vector<Rational>> vectors);
  static Subspace full(std::size_t ambient_dim) { return span(ExactMatrix::identity(ambient_dim)); }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const ExactMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  bool contains(const Subspace& other) const;
  bool contains_vector(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_;
  ExactMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Null space {x : M x = 0} in Q^cols.
Subspace kernel(const ExactMatrix& m);
// Column space of M in Q^rows.
Subspace image(const ExactMatrix& m);
// Span of the union of bases. Throws on ambient dimension mismatch.
Subspace sum(const Subspace& a, const Subspace& b);
// Same as a.contains(b) with the ambient dimensions checked.
bool contains(const Subspace& a, const Subspace& b);

// Orthogonal projection onto U for the standard inner product:
// P = B^T (B B^T)^{-1} B with the basis vectors as the rows of B.
ExactMatrix projection_matrix(const Subspace& u);

}  // namespace psdrank
