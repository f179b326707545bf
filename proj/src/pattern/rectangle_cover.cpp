#include "psdrank/pattern/rectangle_cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace psdrank {

namespace {

struct Cell {
  std::size_t row;
  std::size_t col;
};

std::vector<Cell> target_cells(const SupportPattern& targets) {
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < targets.rows(); ++k)
    for (auto l = targets.row(k).find_first(); l != Bitset::npos; l = targets.row(k).find_next(l))
      cells.push_back({k, l});
  return cells;
}

// compat[i] holds the cells that share some allowed rectangle with cell i.
std::vector<Bitset> compatibility(const SupportPattern& allowed, const std::vector<Cell>& cells) {
  std::vector<Bitset> compat(cells.size(), Bitset(cells.size()));
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i; j < cells.size(); ++j) {
      const bool ok = allowed.get(cells[i].row, cells[j].col) && allowed.get(cells[j].row, cells[i].col);
      compat[i][j] = ok;
      compat[j][i] = ok;
    }
  return compat;
}

std::size_t greedy_fooling(const std::vector<Bitset>& compat, Bitset candidates) {
  std::size_t n = 0;
  for (auto c = candidates.find_first(); c != Bitset::npos; c = candidates.find_next(c)) {
    ++n;
    candidates -= compat[c];
  }
  return n;
}

void require_subset(const SupportPattern& allowed, const SupportPattern& targets) {
  if (allowed.rows() != targets.rows() || allowed.cols() != targets.cols())
    throw std::invalid_argument("rectangle cover: shape mismatch");
  for (std::size_t k = 0; k < targets.rows(); ++k)
    if (!targets.row(k).is_subset_of(allowed.row(k)))
      throw std::invalid_argument("rectangle cover: target cell outside allowed region");
}

class CoverSearch {
 public:
  CoverSearch(std::vector<Bitset> sets, std::vector<Bitset> compat, std::uint64_t budget)
      : sets_(std::move(sets)), compat_(std::move(compat)), budget_(budget) {
    const std::size_t n = compat_.size();
    covering_.resize(n);
    for (std::size_t s = 0; s < sets_.size(); ++s)
      for (auto c = sets_[s].find_first(); c != Bitset::npos; c = sets_[s].find_next(c)) covering_[c].push_back(s);
  }

  void set_incumbent(std::vector<std::size_t> chosen) {
    best_ = std::move(chosen);
    best_size_ = best_.size();
  }

  // Returns false if the node budget ran out.
  bool run() {
    Bitset uncovered(compat_.size());
    uncovered.set();
    std::vector<std::size_t> chosen;
    dfs(uncovered, chosen);
    return !exhausted_;
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void dfs(const Bitset& uncovered, std::vector<std::size_t>& chosen) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (uncovered.none()) {
      if (chosen.size() < best_size_) set_incumbent(chosen);
      return;
    }
    if (chosen.size() + greedy_fooling(compat_, uncovered) >= best_size_) return;

    // Branch on the uncovered cell with the fewest covering rectangles.
    std::size_t pivot = Bitset::npos;
    std::size_t fewest = sets_.size() + 1;
    for (auto c = uncovered.find_first(); c != Bitset::npos; c = uncovered.find_next(c)) {
      if (covering_[c].size() < fewest) {
        fewest = covering_[c].size();
        pivot = c;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (-gain, set)
    for (std::size_t s : covering_[pivot]) order.emplace_back((sets_[s] & uncovered).count(), s);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [gain, s] : order) {
      chosen.push_back(s);
      dfs(uncovered - sets_[s], chosen);
      chosen.pop_back();
      if (exhausted_) return;
    }
  }

  std::vector<Bitset> sets_;
  std::vector<Bitset> compat_;
  std::vector<std::vector<std::size_t>> covering_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = static_cast<std::size_t>(-1);
};

std::vector<std::size_t> greedy_cover(const std::vector<Bitset>& sets, std::size_t universe) {
  Bitset uncovered(universe);
  uncovered.set();
  std::vector<std::size_t> chosen;
  while (uncovered.any()) {
    std::size_t best = 0;
    std::size_t gain = 0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      const std::size_t g = (sets[s] & uncovered).count();
      if (g > gain) {
        gain = g;
        best = s;
      }
    }
    chosen.push_back(best);
    uncovered -= sets[best];
  }
  return chosen;
}

// One row with its target cells; always an allowed rectangle.
BicliqueCover row_cover(const SupportPattern& targets) {
  BicliqueCover cover;
  for (std::size_t k = 0; k < targets.rows(); ++k) {
    if (targets.row(k).none()) continue;
    Bitset left(targets.rows());
    left[k] = true;
    cover.bicliques.push_back({left, targets.row(k)});
  }
  return cover;
}

}  // namespace

std::optional<std::vector<Biclique>> maximal_rectangles(const SupportPattern& allowed,
                                                        const SupportPattern& targets,
                                                        std::size_t cap) {
  std::set<Bitset> closed;
  for (std::size_t k = 0; k < allowed.rows(); ++k) {
    const Bitset& r = allowed.row(k);
    if (r.none()) continue;
    std::vector<Bitset> fresh{r};
    for (const auto& s : closed) {
      Bitset meet = s & r;
      if (meet.any()) fresh.push_back(std::move(meet));
    }
    for (auto& f : fresh) closed.insert(std::move(f));
    if (closed.size() > cap) return std::nullopt;
  }
  std::vector<Biclique> out;
  for (const auto& cols : closed) {
    Bitset rows(allowed.rows());
    bool hits_target = false;
    for (std::size_t k = 0; k < allowed.rows(); ++k) {
      if (!cols.is_subset_of(allowed.row(k))) continue;
      rows[k] = true;
      hits_target = hits_target || targets.row(k).intersects(cols);
    }
    if (hits_target) out.push_back({rows, cols});
  }
  return out;
}

std::size_t fooling_set_bound(const SupportPattern& allowed, const SupportPattern& targets) {
  require_subset(allowed, targets);
  const auto cells = target_cells(targets);
  Bitset all(cells.size());
  all.set();
  return greedy_fooling(compatibility(allowed, cells), all);
}

CoverResult min_rectangle_cover(const SupportPattern& allowed, const SupportPattern& targets,
                                std::uint64_t budget) {
  require_subset(allowed, targets);
  const auto cells = target_cells(targets);
  CoverResult result;
  if (cells.empty()) {
    result.exact = true;
    return result;
  }
  auto compat = compatibility(allowed, cells);
  {
    Bitset all(cells.size());
    all.set();
    result.lower = greedy_fooling(compat, all);
  }

  const auto rects = maximal_rectangles(allowed, targets, static_cast<std::size_t>(std::min<std::uint64_t>(budget, SIZE_MAX)));
  if (!rects) {
    result.cover = row_cover(targets);
    result.upper = result.cover.size();
    result.exact = result.lower == result.upper;
    return result;
  }
  result.candidate_rectangles = rects->size();

  std::vector<Bitset> sets;
  sets.reserve(rects->size());
  for (const auto& r : *rects) {
    Bitset s(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) s[i] = r.contains_edge(cells[i].row, cells[i].col);
    sets.push_back(std::move(s));
  }

  CoverSearch search(sets, std::move(compat), budget);
  search.set_incumbent(greedy_cover(sets, cells.size()));
  const bool complete = search.run();
  result.nodes = search.nodes();
  for (std::size_t s : search.best()) result.cover.bicliques.push_back((*rects)[s]);
  result.upper = result.cover.size();
  result.exact = complete || result.lower == result.upper;
  if (result.exact) result.lower = result.upper;
  return result;
}

CoverResult boolean_rank(const SupportPattern& m, std::uint64_t budget) {
  return min_rectangle_cover(m, m, budget);
}

CoverResult feasible_biclique_cover(const BipartiteGraph& ones, const BipartiteGraph& forbidden,
                                    std::uint64_t budget) {
  if (ones.left_count != forbidden.left_count || ones.right_count != forbidden.right_count)
    throw std::invalid_argument("feasible_biclique_cover: vertex sets differ");
  for (std::size_t u = 0; u < ones.left_count; ++u)
    if (ones.adjacency[u].intersects(forbidden.adjacency[u]))
      throw std::invalid_argument("feasible_biclique_cover: edge sets intersect");
  return min_rectangle_cover(forbidden.as_pattern().complement(), ones.as_pattern(), budget);
}

}  // namespace psdrank
