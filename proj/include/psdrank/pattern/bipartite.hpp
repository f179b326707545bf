#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "psdrank/pattern/pattern.hpp"

namespace psdrank {

// Bipartite graph stored as one right-neighbour bitset per left vertex.
struct BipartiteGraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<Bitset> adjacency;

  BipartiteGraph() = default;
  BipartiteGraph(std::size_t left, std::size_t right)
      : left_count(left), right_count(right), adjacency(left, Bitset(right)) {}

  bool has_edge(std::size_t u, std::size_t v) const { return adjacency[u][v]; }
  void add_edge(std::size_t u, std::size_t v) { adjacency[u][v] = true; }
  std::size_t edge_count() const;

  // Edge (u, v) <-> bit (u, v).
  SupportPattern as_pattern() const;
  static BipartiteGraph from_pattern(const SupportPattern& p);

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.left_count == b.left_count && a.right_count == b.right_count && a.adjacency == b.adjacency;
  }
};

struct Biclique {
  Bitset left;
  Bitset right;

  std::size_t edge_count() const { return left.count() * right.count(); }
  bool contains_edge(std::size_t u, std::size_t v) const { return left[u] && right[v]; }
};

struct BicliqueCover {
  std::vector<Biclique> bicliques;

  std::size_t size() const { return bicliques.size(); }
};

// Hasse diagram of the poset of a support pattern: rows on the left,
// columns on the right, and an edge (k, l) exactly where the pattern is 0.
BipartiteGraph poset_of(const SupportPattern& m);

// True iff every biclique is nonempty on both sides, all its edges are
// edges of `within`, and every edge of `target` is covered.
bool is_biclique_cover(const BicliqueCover& cover, const BipartiteGraph& target, const SupportPattern& within);
// True iff no biclique contains an edge of `forbidden`.
bool avoids_edges(const BicliqueCover& cover, const BipartiteGraph& forbidden);

// Graph text format: `L R`, then one line per left vertex listing its
// right neighbours (1-based). An empty line is a vertex without neighbours.
// Lines whose first non-blank character is `#` are comments.
BipartiteGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const BipartiteGraph& g);

}  // namespace psdrank
