#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "psdrank/pattern/bipartite.hpp"
#include "psdrank/pattern/pattern.hpp"

namespace psdrank {

inline constexpr std::uint64_t kDefaultCoverBudget = 2'000'000;

// Outcome of a minimum cover search. When `exact` is false the node budget
// ran out and only the bracket [lower, upper] is known; `cover` is then the
// best cover found.
struct CoverResult {
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  BicliqueCover cover;
  std::uint64_t nodes = 0;
  std::size_t candidate_rectangles = 0;

  std::optional<std::size_t> value() const {
    return exact ? std::optional<std::size_t>(upper) : std::nullopt;
  }
};

// Maximal all-`allowed` rectangles R x C that contain at least one target
// cell. Closed column sets are generated as intersections of row supports.
// Returns nullopt if more than `cap` closed sets arise.
std::optional<std::vector<Biclique>> maximal_rectangles(const SupportPattern& allowed,
                                                        const SupportPattern& targets,
                                                        std::size_t cap);

// Size of a greedily built fooling set among `targets`: cells pairwise not
// coverable by a single `allowed` rectangle. Lower-bounds any cover.
std::size_t fooling_set_bound(const SupportPattern& allowed, const SupportPattern& targets);

// Minimum number of all-`allowed` rectangles covering every target cell.
// Requires targets to be a subset of allowed. Branch-and-bound over maximal
// rectangles with a greedy initial cover and a fooling-set prune; the
// traversal order is fixed so results are reproducible.
CoverResult min_rectangle_cover(const SupportPattern& allowed, const SupportPattern& targets,
                                std::uint64_t budget = kDefaultCoverBudget);

// Boolean rank (biclique cover number of the 1-entries).
CoverResult boolean_rank(const SupportPattern& m, std::uint64_t budget = kDefaultCoverBudget);

// Minimum number of bicliques covering every edge of `ones` while containing
// no edge of `forbidden`. Bicliques may use pairs that are edges of neither.
// Throws std::invalid_argument if the vertex sets differ or the edge sets
// intersect.
CoverResult feasible_biclique_cover(const BipartiteGraph& ones, const BipartiteGraph& forbidden,
                                    std::uint64_t budget = kDefaultCoverBudget);

}  // namespace psdrank
