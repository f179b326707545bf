#include "psdrank/pattern/bipartite.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace psdrank {

std::size_t BipartiteGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& a : adjacency) n += a.count();
  return n;
}

SupportPattern BipartiteGraph::as_pattern() const {
  SupportPattern p(left_count, right_count);
  for (std::size_t u = 0; u < left_count; ++u)
    for (std::size_t v = 0; v < right_count; ++v)
      if (has_edge(u, v)) p.set(u, v);
  return p;
}

BipartiteGraph BipartiteGraph::from_pattern(const SupportPattern& p) {
  BipartiteGraph g(p.rows(), p.cols());
  for (std::size_t u = 0; u < p.rows(); ++u) g.adjacency[u] = p.row(u);
  return g;
}

BipartiteGraph poset_of(const SupportPattern& m) { return BipartiteGraph::from_pattern(m.complement()); }

bool is_biclique_cover(const BicliqueCover& cover, const BipartiteGraph& target, const SupportPattern& within) {
  std::vector<Bitset> covered(target.left_count, Bitset(target.right_count));
  for (const auto& b : cover.bicliques) {
    if (b.left.size() != target.left_count || b.right.size() != target.right_count) return false;
    if (b.left.none() || b.right.none()) return false;
    for (auto u = b.left.find_first(); u != Bitset::npos; u = b.left.find_next(u)) {
      if (!b.right.is_subset_of(within.row(u))) return false;
      covered[u] |= b.right;
    }
  }
  for (std::size_t u = 0; u < target.left_count; ++u)
    if (!target.adjacency[u].is_subset_of(covered[u])) return false;
  return true;
}

bool avoids_edges(const BicliqueCover& cover, const BipartiteGraph& forbidden) {
  for (const auto& b : cover.bicliques)
    for (auto u = b.left.find_first(); u != Bitset::npos; u = b.left.find_next(u))
      if (b.right.intersects(forbidden.adjacency[u])) return false;
  return true;
}

namespace {

bool is_comment(const std::string& line) {
  const auto p = line.find_first_not_of(" \t\r");
  return p != std::string::npos && line[p] == '#';
}

}  // namespace

BipartiteGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t left = 0;
  std::size_t right = 0;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    if (is_comment(line) || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream hs(line);
    long long l = -1;
    long long r = -1;
    if (!(hs >> l >> r) || l < 0 || r < 0) throw std::invalid_argument("graph: bad `L R` header");
    left = static_cast<std::size_t>(l);
    right = static_cast<std::size_t>(r);
    have_header = true;
  }
  if (!have_header) throw std::invalid_argument("graph: missing `L R` header");
  BipartiteGraph g(left, right);
  std::size_t u = 0;
  while (u < left && std::getline(in, line)) {
    if (is_comment(line)) continue;
    std::istringstream ls(line);
    long long v = 0;
    while (ls >> v) {
      if (v < 1 || static_cast<std::size_t>(v) > right)
        throw std::invalid_argument("graph: neighbour index out of range on left vertex " + std::to_string(u + 1));
      g.add_edge(u, static_cast<std::size_t>(v - 1));
    }
    if (!ls.eof()) throw std::invalid_argument("graph: bad neighbour list on left vertex " + std::to_string(u + 1));
    ++u;
  }
  // Missing trailing lines are vertices without neighbours.
  return g;
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << g.left_count << ' ' << g.right_count << '\n';
  for (std::size_t u = 0; u < g.left_count; ++u) {
    bool first = true;
    for (auto v = g.adjacency[u].find_first(); v != Bitset::npos; v = g.adjacency[u].find_next(v)) {
      if (!first) out << ' ';
      out << (v + 1);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace psdrank
