#include "psdrank/embed/embedding.hpp"

#include <stdexcept>

#include "psdrank/exact/elimination.hpp"
#include "psdrank/pattern/triangular.hpp"

namespace psdrank {

bool verify_embedding(const SubspaceEmbedding& e, const SupportPattern& m) {
  if (e.U.size() != m.rows() || e.V.size() != m.cols())
    throw std::invalid_argument("verify_embedding: embedding has " + std::to_string(e.U.size()) + "x" +
                                std::to_string(e.V.size()) + " subspaces, pattern is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()));
  for (const auto* side : {&e.U, &e.V})
    for (const auto& s : *side)
      if (s.ambient_dim() != e.ambient_dim) throw std::invalid_argument("verify_embedding: ambient dimension mismatch");
  for (std::size_t k = 0; k < m.rows(); ++k)
    for (std::size_t l = 0; l < m.cols(); ++l)
      if (e.V[l].contains(e.U[k]) != !m.get(k, l)) return false;
  return true;
}

SubspaceEmbedding embedding_from_rank_factorization(const ExactMatrix& s) {
  const Subspace row_space = Subspace::span(s);
  const std::size_t q = row_space.dim();
  const auto& pivots = row_space.pivot_columns();

  // In the RREF basis, the coordinates of a row-space vector are its
  // entries at the pivot columns.
  std::vector<std::vector<Rational>> coords(s.rows(), std::vector<Rational>(q));
  for (std::size_t k = 0; k < s.rows(); ++k)
    for (std::size_t i = 0; i < q; ++i) coords[k][i] = s(k, pivots[i]);

  SubspaceEmbedding e;
  e.ambient_dim = q;
  for (std::size_t k = 0; k < s.rows(); ++k) e.U.push_back(Subspace::span(q, std::span(&coords[k], 1)));
  for (std::size_t l = 0; l < s.cols(); ++l) {
    std::vector<std::vector<Rational>> gens;
    for (std::size_t k = 0; k < s.rows(); ++k)
      if (s(k, l).is_zero()) gens.push_back(coords[k]);
    e.V.push_back(Subspace::span(q, gens));
  }
  return e;
}

EmbeddingFactorization psd_from_embedding(const SubspaceEmbedding& e) {
  EmbeddingFactorization out;
  auto& f = out.factorization;
  f.order = e.ambient_dim;
  const ExactMatrix id = ExactMatrix::identity(e.ambient_dim);
  for (const auto& u : e.U) {
    if (u.ambient_dim() != e.ambient_dim) throw std::invalid_argument("psd_from_embedding: ambient dimension mismatch");
    f.A.push_back(projection_matrix(u));
  }
  for (const auto& v : e.V) {
    if (v.ambient_dim() != e.ambient_dim) throw std::invalid_argument("psd_from_embedding: ambient dimension mismatch");
    f.B.push_back(id - projection_matrix(v));
  }
  out.T = f.product();
  return out;
}

SubspaceEmbedding embedding_from_psd(const PsdFactorization& f) {
  SubspaceEmbedding e;
  e.ambient_dim = f.order;
  for (const auto& a : f.A) {
    if (a.rows() != f.order || !is_psd(a)) throw std::invalid_argument("embedding_from_psd: A factor is not psd");
    e.U.push_back(image(a));
  }
  for (const auto& b : f.B) {
    if (b.rows() != f.order || !is_psd(b)) throw std::invalid_argument("embedding_from_psd: B factor is not psd");
    e.V.push_back(kernel(b));
  }
  return e;
}

EmbeddingRankBounds embrkl_bounds(const ExactMatrix& s) {
  return {triangular_rank(support(s)), rank(s)};
}

}  // namespace psdrank
