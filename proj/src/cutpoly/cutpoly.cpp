#include "psdrank/cutpoly/cutpoly.hpp"

#include <stdexcept>
#include <string>

#include "psdrank/util/parallel.hpp"

namespace psdrank {

namespace {

void require_n(std::size_t n) {
  if (n < 2 || n > kMaxCutPolyN)
    throw std::invalid_argument("cut polytope constructions need 2 <= n <= " + std::to_string(kMaxCutPolyN) +
                                ", got " + std::to_string(n));
}

// All k-subsets of {0..n-1} as bitsets, lexicographic in sorted elements.
std::vector<Bitset> combinations(std::size_t n, std::size_t k) {
  std::vector<Bitset> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Bitset b(n);
    for (auto i : idx) b[i] = true;
    out.push_back(std::move(b));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::uint64_t{1} << 40)) return r;
  }
  return r;
}

struct ReductionParams {
  std::size_t N;
  std::size_t l;
};

ReductionParams reduction_params(std::size_t n, std::size_t cap) {
  if (n % 8 != 2) throw std::invalid_argument("reduction check needs n ≡ 2 (mod 8), got " + std::to_string(n));
  if (n < 18)
    throw std::invalid_argument("reduction check is degenerate for n = " + std::to_string(n) +
                                " (l = 1 gives cliques of size 0); use n >= 18");
  if (n > cap) throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  return {n / 2, n / 8};
}

Bitset with_tail(std::size_t n, const Bitset& head) {
  const std::size_t N = n / 2;
  const std::size_t l = N / 4;
  Bitset s(n);
  for (std::size_t i = 0; i < head.size(); ++i) s[i] = head[i];
  for (std::size_t i = N; i + 2 < N + l; ++i) s[i] = true;
  return s;
}

}  // namespace

Cut Cut::of(Bitset w) {
  if (w.size() > 0 && w[0]) w.flip();
  return {w.size(), std::move(w)};
}

std::vector<Cut> enumerate_cuts(std::size_t n) {
  require_n(n);
  std::vector<Cut> cuts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    Bitset w(n);
    for (std::size_t v = 1; v < n; ++v) w[v] = (mask >> (v - 1)) & 1U;
    cuts.push_back({n, std::move(w)});
  }
  return cuts;
}

std::vector<Clique> enumerate_cliques(std::size_t n) {
  require_n(n);
  std::vector<Clique> cliques;
  for (std::size_t size = 2; size <= n; ++size)
    for (auto& u : combinations(n, size)) cliques.push_back({n, std::move(u)});
  return cliques;
}

Rational cut_clique_slack(const Clique& u, const Cut& w) {
  if (u.n != w.n) throw std::invalid_argument("cut_clique_slack: vertex counts differ");
  const auto size = static_cast<long long>(u.U.count());
  const auto inside = static_cast<long long>((u.U & w.W).count());
  return Rational(size * size, 4) - Rational(inside * (size - inside));
}

std::int64_t clique_inequality_slack(const Clique& u, const Cut& w) {
  if (u.n != w.n) throw std::invalid_argument("clique_inequality_slack: vertex counts differ");
  const auto size = static_cast<std::int64_t>(u.U.count());
  const auto inside = static_cast<std::int64_t>((u.U & w.W).count());
  return size * size / 4 - inside * (size - inside);
}

BipartiteGraph graph_G(std::size_t n) {
  const auto cliques = enumerate_cliques(n);
  const auto cuts = enumerate_cuts(n);
  BipartiteGraph g(cliques.size(), cuts.size());
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      const bool edge = cut_clique_slack(cliques[i], cuts[j]) > 0;
      const bool unbalanced = 2 * (cliques[i].U & cuts[j].W).count() != cliques[i].U.count();
      if (edge != unbalanced) throw std::logic_error("graph_G: slack and balanced-split tests disagree");
      if (edge) g.add_edge(i, j);
    }
  return g;
}

void for_each_slack_row(std::size_t n, const std::function<void(const std::vector<Rational>&)>& emit) {
  const auto cliques = enumerate_cliques(n);
  const auto cuts = enumerate_cuts(n);
  std::vector<Rational> row(cuts.size());
  for (const auto& u : cliques) {
    for (std::size_t j = 0; j < cuts.size(); ++j) row[j] = Rational(clique_inequality_slack(u, cuts[j]));
    emit(row);
  }
}

ExactMatrix slack_matrix_cut_clique(std::size_t n) {
  require_n(n);
  const std::size_t cols = std::size_t{1} << (n - 1);
  std::vector<Rational> data;
  for_each_slack_row(n, [&](const std::vector<Rational>& row) { data.insert(data.end(), row.begin(), row.end()); });
  const std::size_t rows = data.size() / cols;
  return ExactMatrix(rows, cols, std::move(data));
}

DisjointnessGraphs graph_H(std::size_t N, std::size_t l, std::size_t cap) {
  if (l < 1 || l > N) throw std::invalid_argument("graph_H: need 1 <= l <= N");
  if (binomial(N, l) > cap)
    throw std::invalid_argument("graph_H: C(" + std::to_string(N) + ", " + std::to_string(l) + ") exceeds the cap " +
                                std::to_string(cap));
  DisjointnessGraphs d;
  d.N = N;
  d.l = l;
  d.subsets = combinations(N, l);
  const std::size_t v = d.subsets.size();
  d.H = BipartiteGraph(v, v);
  d.Hbar = BipartiteGraph(v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      const auto meet = (d.subsets[i] & d.subsets[j]).count();
      if (meet == 0) d.H.add_edge(i, j);
      if (meet == 1) d.Hbar.add_edge(i, j);
    }
  return d;
}

Clique appendix_clique(std::size_t n, const Bitset& x) { return {n, with_tail(n, x)}; }

Cut appendix_cut(std::size_t n, const Bitset& y) { return Cut::of(with_tail(n, y)); }

AppendixCheck appendix_reduction_check(std::size_t n, std::size_t cap, unsigned threads) {
  const auto [N, l] = reduction_params(n, cap);
  const auto subsets = combinations(N, l);
  AppendixCheck r;
  r.n = n;
  r.N = N;
  r.l = l;
  r.clique_size = 2 * l - 2;

  std::vector<std::uint64_t> failures(std::max(1U, threads), 0);
  std::vector<std::uint64_t> checked(failures.size(), 0);
  parallel_chunks(subsets.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    for (std::size_t i = begin; i < end; ++i) {
      const Bitset u = with_tail(n, subsets[i]);
      for (const auto& y : subsets) {
        const Bitset w = with_tail(n, y);
        const bool balanced = 2 * (u & w).count() == u.count();
        const bool unique_meet = (subsets[i] & y).count() == 1;
        if (u.count() != r.clique_size || balanced != unique_meet) ++failures[c];
        ++checked[c];
      }
    }
  });
  for (std::size_t c = 0; c < failures.size(); ++c) {
    r.failures += failures[c];
    r.pairs_checked += checked[c];
  }
  r.passed = r.failures == 0;
  return r;
}

BipartiteGraph appendix_subgraph(std::size_t n, std::size_t cap) {
  const auto [N, l] = reduction_params(n, cap);
  const auto subsets = combinations(N, l);
  BipartiteGraph g(subsets.size(), subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const Clique u = appendix_clique(n, subsets[i]);
    for (std::size_t j = 0; j < subsets.size(); ++j)
      if (cut_clique_slack(u, appendix_cut(n, subsets[j])) > 0) g.add_edge(i, j);
  }
  return g;
}

BicliqueCover map_cover_to_disjointness(std::size_t n, const std::vector<GBiclique>& cover, std::size_t cap) {
  const auto [N, l] = reduction_params(n, cap);
  const auto subsets = combinations(N, l);
  std::vector<Clique> cliques;
  std::vector<Cut> cuts;
  for (const auto& x : subsets) {
    cliques.push_back(appendix_clique(n, x));
    cuts.push_back(appendix_cut(n, x));
  }

  BicliqueCover out;
  for (const auto& b : cover) {
    for (const auto& u : b.cliques)
      for (const auto& w : b.cuts)
        if (!(cut_clique_slack(u, w) > 0))
          throw std::invalid_argument("map_cover_to_disjointness: input contains a non-edge of G");
    Biclique mapped{Bitset(subsets.size()), Bitset(subsets.size())};
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (const auto& u : b.cliques)
        if (u.U == cliques[i].U) mapped.left[i] = true;
      for (const auto& w : b.cuts)
        if (w == cuts[i]) mapped.right[i] = true;
    }
    if (mapped.left.any() && mapped.right.any()) out.bicliques.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace psdrank
