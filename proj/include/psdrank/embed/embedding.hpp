#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "psdrank/exact/subspace.hpp"
#include "psdrank/pattern/pattern.hpp"
#include "psdrank/psd/factorization.hpp"

namespace psdrank {

// Subspaces U_1..U_m, V_1..V_n of Q^q meant to satisfy
// U_k ⊆ V_l  <=>  M(k, l) = 0.
struct SubspaceEmbedding {
  std::size_t ambient_dim = 0;
  std::vector<Subspace> U;
  std::vector<Subspace> V;
};

// True iff containment holds exactly at the zero entries of `m`. Throws
// std::invalid_argument if the shapes or ambient dimensions disagree.
bool verify_embedding(const SubspaceEmbedding& e, const SupportPattern& m);

// U_k = span of row k, V_l = span of the rows vanishing in column l,
// expressed in coordinates of a basis of the row space, so the ambient
// dimension equals rank(S). Zero rows give U_k = 0; zero columns give the
// whole row space.
SubspaceEmbedding embedding_from_rank_factorization(const ExactMatrix& s);

struct EmbeddingFactorization {
  PsdFactorization factorization;
  ExactMatrix T;  // T(k, l) = tr(A_k B_l)
};

// A_k = orthogonal projection onto U_k, B_l = Id - projection onto V_l.
// supp(T)(k, l) = 0 exactly when U_k ⊆ V_l.
EmbeddingFactorization psd_from_embedding(const SubspaceEmbedding& e);

// U_k = img A_k, V_l = ker B_l. For psd factors tr(A B) = 0 iff A B = 0 iff
// img A ⊆ ker B. Throws std::invalid_argument if a factor is not psd.
SubspaceEmbedding embedding_from_psd(const PsdFactorization& f);

struct EmbeddingRankBounds {
  std::size_t lower = 0;  // triangular rank of supp(S)
  std::size_t upper = 0;  // rank(S)
};

// Bracket on the subspace-lattice embedding rank of S.
EmbeddingRankBounds embrkl_bounds(const ExactMatrix& s);

}  // namespace psdrank
