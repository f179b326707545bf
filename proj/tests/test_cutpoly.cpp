#include <gtest/gtest.h>

#include "psdrank/cutpoly/cutpoly.hpp"
#include "psdrank/pattern/rectangle_cover.hpp"

namespace psdrank {
namespace {

Bitset set_of(std::size_t n, std::initializer_list<std::size_t> one_based) {
  Bitset b(n);
  for (auto v : one_based) b.set(v - 1);
  return b;
}

// Edges of K_n inside U with exactly one endpoint in W, counted pair by pair.
std::size_t cut_edges_inside(const Bitset& u, const Bitset& w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] && u[j] && w[i] != w[j]) ++count;
  return count;
}

TEST(Cuts, CountAndCanonicalForm) {
  for (std::size_t n = 2; n <= kMaxCutPolyN; ++n) {
    const auto cuts = enumerate_cuts(n);
    EXPECT_EQ(cuts.size(), std::size_t{1} << (n - 1));
    for (const auto& c : cuts) EXPECT_FALSE(c.W[0]);
  }
  const Bitset w = set_of(4, {1, 2});
  EXPECT_EQ(Cut::of(w), Cut::of(~w));
  EXPECT_EQ(Cut::of(w).W, set_of(4, {3, 4}));
}

TEST(Cliques, Count) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto cliques = enumerate_cliques(n);
    EXPECT_EQ(cliques.size(), (std::size_t{1} << n) - n - 1);
    for (std::size_t i = 1; i < cliques.size(); ++i) EXPECT_LE(cliques[i - 1].U.count(), cliques[i].U.count());
  }
}

TEST(Slack, Examples) {
  EXPECT_EQ(cut_clique_slack({4, set_of(4, {1, 2, 3, 4})}, Cut::of(set_of(4, {1, 2}))), Rational(0));
  for (const auto& c : enumerate_cuts(5))
    EXPECT_GE(cut_clique_slack({5, set_of(5, {1, 3, 5})}, c), Rational(1, 4));
  EXPECT_EQ(cut_clique_slack({3, set_of(3, {1, 2})}, Cut::of(set_of(3, {1, 3}))), Rational(0));
  EXPECT_EQ(clique_inequality_slack({4, set_of(4, {1, 2, 3, 4})}, Cut::of(set_of(4, {1, 2}))), 0);
  EXPECT_EQ(clique_inequality_slack({4, set_of(4, {1, 2, 3})}, Cut::of(set_of(4, {1}))), 0);
}

TEST(GraphG, ThreeWayAgreement) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const BipartiteGraph g = graph_G(n);
    const auto cliques = enumerate_cliques(n);
    const auto cuts = enumerate_cuts(n);
    ASSERT_EQ(g.left_count, cliques.size());
    ASSERT_EQ(g.right_count, cuts.size());
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      const std::size_t size = cliques[i].U.count();
      for (std::size_t j = 0; j < cuts.size(); ++j) {
        const std::size_t inside = cut_edges_inside(cliques[i].U, cuts[j].W);
        const bool by_count = 4 * inside < size * size;
        const bool by_split = 2 * (cliques[i].U & cuts[j].W).count() != size;
        EXPECT_EQ(g.has_edge(i, j), by_count);
        EXPECT_EQ(g.has_edge(i, j), by_split);
        EXPECT_EQ(g.has_edge(i, j), cut_clique_slack(cliques[i], cuts[j]) > 0);
      }
    }
  }
}

TEST(GraphG, Examples) {
  const BipartiteGraph g = graph_G(4);
  EXPECT_EQ(g.right_count, 8U);
  const auto cliques = enumerate_cliques(4);
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    std::size_t degree = g.adjacency[i].count();
    if (cliques[i].U.count() % 2 == 1) EXPECT_EQ(degree, 8U);
    if (cliques[i].U == set_of(4, {1, 2})) EXPECT_EQ(8 - degree, 4U);
  }
  EXPECT_THROW(graph_G(1), std::invalid_argument);
  EXPECT_THROW(graph_G(kMaxCutPolyN + 1), std::invalid_argument);
}

TEST(SlackMatrix, ShapeAndSupport) {
  const ExactMatrix s5 = slack_matrix_cut_clique(5);
  EXPECT_EQ(s5.rows(), 26U);
  EXPECT_EQ(s5.cols(), 16U);
  for (std::size_t n = 3; n <= 6; ++n) {
    const ExactMatrix s = slack_matrix_cut_clique(n);
    const BipartiteGraph g = graph_G(n);
    const auto cliques = enumerate_cliques(n);
    std::size_t odd_gaps = 0;
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j) {
        EXPECT_GE(s(i, j), 0);
        if (cliques[i].U.count() % 2 == 0) {
          EXPECT_EQ(s(i, j) != 0, g.has_edge(i, j));
        } else {
          EXPECT_TRUE(g.has_edge(i, j));
          odd_gaps += s(i, j) == 0;
        }
      }
    // Floored slack vanishes at near-balanced splits of odd cliques.
    EXPECT_GT(odd_gaps, 0U);
  }
  std::vector<std::vector<Rational>> rows;
  for_each_slack_row(5, [&](const std::vector<Rational>& r) { rows.push_back(r); });
  ASSERT_EQ(rows.size(), s5.rows());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < s5.cols(); ++j) EXPECT_EQ(rows[i][j], s5(i, j));
}

TEST(GraphH, Examples) {
  const DisjointnessGraphs d = graph_H(5, 1);
  EXPECT_EQ(d.H.as_pattern(), SupportPattern::identity(5).complement());
  EXPECT_EQ(d.Hbar.as_pattern(), SupportPattern::identity(5));
  EXPECT_EQ(d.H.edge_count(), 20U);

  const DisjointnessGraphs d9 = graph_H(9, 2);
  EXPECT_EQ(d9.subsets.size(), 36U);
  for (const auto& row : d9.H.adjacency) EXPECT_EQ(row.count(), 21U);
  for (std::size_t i = 0; i < 36; ++i) EXPECT_FALSE(d9.H.adjacency[i].intersects(d9.Hbar.adjacency[i]));

  EXPECT_THROW(graph_H(3, 0), std::invalid_argument);
  EXPECT_THROW(graph_H(3, 4), std::invalid_argument);
  EXPECT_THROW(graph_H(20, 10, 1000), std::invalid_argument);
}

TEST(GraphH, FeasibleCoverOfH5) {
  const DisjointnessGraphs d = graph_H(5, 1);
  const CoverResult r = feasible_biclique_cover(d.H, d.Hbar);
  EXPECT_EQ(r.value(), 4U);
  EXPECT_TRUE(avoids_edges(r.cover, d.Hbar));
}

TEST(DisjointnessReduction, ReductionCheck) {
  const AppendixCheck c = appendix_reduction_check(18);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.N, 9U);
  EXPECT_EQ(c.l, 2U);
  EXPECT_EQ(c.clique_size, 2U);
  EXPECT_EQ(c.pairs_checked, 1296U);
  EXPECT_EQ(c.failures, 0U);

  const AppendixCheck c26 = appendix_reduction_check(26, 26, 4);
  EXPECT_TRUE(c26.passed);
  EXPECT_EQ(c26.pairs_checked, 286U * 286U);

  EXPECT_THROW(appendix_reduction_check(10), std::invalid_argument);
  EXPECT_THROW(appendix_reduction_check(20), std::invalid_argument);
  EXPECT_THROW(appendix_reduction_check(26), std::invalid_argument);
}

TEST(DisjointnessReduction, SubgraphIsComplementOfHbar) {
  const BipartiteGraph sub = appendix_subgraph(18);
  const DisjointnessGraphs d = graph_H(9, 2);
  EXPECT_EQ(sub.as_pattern(), d.Hbar.as_pattern().complement());
}

TEST(DisjointnessReduction, CoverOfGMapsToFeasibleCover) {
  const std::size_t n = 18;
  const DisjointnessGraphs d = graph_H(9, 2);
  const CoverResult sub_cover = boolean_rank(appendix_subgraph(n).as_pattern(), 20000);
  std::vector<GBiclique> lifted;
  for (const auto& b : sub_cover.cover.bicliques) {
    GBiclique g;
    for (auto i = b.left.find_first(); i != Bitset::npos; i = b.left.find_next(i))
      g.cliques.push_back(appendix_clique(n, d.subsets[i]));
    for (auto j = b.right.find_first(); j != Bitset::npos; j = b.right.find_next(j))
      g.cuts.push_back(appendix_cut(n, d.subsets[j]));
    lifted.push_back(g);
  }
  const BicliqueCover mapped = map_cover_to_disjointness(n, lifted);
  EXPECT_EQ(mapped.size(), lifted.size());
  EXPECT_TRUE(is_biclique_cover(mapped, d.H, d.Hbar.as_pattern().complement()));
  EXPECT_TRUE(avoids_edges(mapped, d.Hbar));

  GBiclique bad;
  bad.cliques.push_back(appendix_clique(n, d.subsets[0]));
  bad.cuts.push_back(appendix_cut(n, d.subsets[1]));
  ASSERT_EQ((d.subsets[0] & d.subsets[1]).count(), 1U);
  EXPECT_THROW(map_cover_to_disjointness(n, {bad}), std::invalid_argument);
}

}  // namespace
}  // namespace psdrank
