#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "psdrank/exact/matrix.hpp"
#include "psdrank/pattern/bipartite.hpp"

namespace psdrank {

// Cut δ(W) of K_n. W is stored as the side not containing vertex 1, the
// lexicographically smaller of W and its complement.
struct Cut {
  std::size_t n = 0;
  Bitset W;

  static Cut of(Bitset w);
  friend bool operator==(const Cut& a, const Cut& b) { return a.n == b.n && a.W == b.W; }
};

// Clique on the vertex set U of K_n, |U| >= 2.
struct Clique {
  std::size_t n = 0;
  Bitset U;
};

inline constexpr std::size_t kMaxCutPolyN = 8;

// All 2^(n-1) cuts, ordered by the bitmask of W.
std::vector<Cut> enumerate_cuts(std::size_t n);
// All subsets with at least two vertices, ordered by size, then
// lexicographically by their sorted elements.
std::vector<Clique> enumerate_cliques(std::size_t n);

// |U|^2/4 - |U ∩ δ(W)| where |U ∩ δ(W)| = |U ∩ W| * |U \ W|.
Rational cut_clique_slack(const Clique& u, const Cut& w);
// Integer clique-inequality slack floor(|U|^2/4) - |U ∩ W| * |U \ W|.
std::int64_t clique_inequality_slack(const Clique& u, const Cut& w);

// Left: cliques, right: cuts, edge iff cut_clique_slack > 0. Throws
// std::invalid_argument for n < 2 or n > kMaxCutPolyN, and std::logic_error
// if an edge disagrees with the balanced-split test 2|U ∩ W| != |U|.
BipartiteGraph graph_G(std::size_t n);

// Rows: cliques, columns: cuts, entries clique_inequality_slack.
ExactMatrix slack_matrix_cut_clique(std::size_t n);
// Same rows, one at a time.
void for_each_slack_row(std::size_t n, const std::function<void(const std::vector<Rational>&)>& emit);

struct DisjointnessGraphs {
  std::size_t N = 0;
  std::size_t l = 0;
  std::vector<Bitset> subsets;  // l-subsets of {1..N} in lexicographic order
  BipartiteGraph H;             // x ∩ y = ∅
  BipartiteGraph Hbar;          // |x ∩ y| = 1
};

inline constexpr std::size_t kDefaultSubsetCap = 5000;

// Throws std::invalid_argument unless 1 <= l <= N and C(N, l) <= cap.
DisjointnessGraphs graph_H(std::size_t N, std::size_t l, std::size_t cap = kDefaultSubsetCap);

struct AppendixCheck {
  std::size_t n = 0;
  std::size_t N = 0;
  std::size_t l = 0;
  std::size_t clique_size = 0;  // |U| = 2l - 2
  std::uint64_t pairs_checked = 0;
  std::uint64_t failures = 0;
  bool passed = false;
};

inline constexpr std::size_t kDefaultAppendixCap = 18;

// For n ≡ 2 (mod 8), N = n/2, l = floor(N/4): every pair of l-subsets x, y
// of {1..N} with U = x ∪ tail, W = y ∪ tail, tail = {N+1..N+l-2}, satisfies
// |U ∩ W| = |U|/2 iff |x ∩ y| = 1. Throws std::invalid_argument unless
// n ≡ 2 (mod 8), 18 <= n <= cap (n = 10 gives l = 1 and |U| = 0).
AppendixCheck appendix_reduction_check(std::size_t n, std::size_t cap = kDefaultAppendixCap, unsigned threads = 1);

// Clique x ∪ tail and cut δ(y ∪ tail) of K_n for l-subsets x, y of {1..N}.
Clique appendix_clique(std::size_t n, const Bitset& x);
Cut appendix_cut(std::size_t n, const Bitset& y);

// The subgraph of G spanned by the reduction cliques and cuts, indexed like
// graph_H(N, l).subsets on both sides.
BipartiteGraph appendix_subgraph(std::size_t n, std::size_t cap = kDefaultAppendixCap);

// A biclique of G given by its clique and cut vertex sets.
struct GBiclique {
  std::vector<Clique> cliques;
  std::vector<Cut> cuts;
};

// Restricts each biclique of G to the reduction vertices and relabels them by
// the l-subsets x = U ∩ {1..N}, y = W ∩ {1..N}. Throws std::invalid_argument
// if some input is not a biclique of G. The result covers H_N if the input
// covers that subgraph, and no output biclique contains an edge of
// Hbar_N.
BicliqueCover map_cover_to_disjointness(std::size_t n, const std::vector<GBiclique>& cover,
                                        std::size_t cap = kDefaultAppendixCap);

}  // namespace psdrank
