#include "psdrank/pattern/triangular.hpp"

#include <algorithm>
#include <map>

namespace psdrank {

namespace {

// Maximum matching between rows and the columns of `mask` along 1-entries.
// Every continuation of a triangular sequence from `mask` is such a matching.
std::size_t matching_bound(const SupportPattern& m, const Bitset& mask) {
  std::vector<std::size_t> match_col(m.cols(), m.rows());
  std::size_t size = 0;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (!m.row(k).intersects(mask)) continue;
    std::vector<bool> seen(m.cols(), false);
    auto augment = [&](auto&& self, std::size_t row) -> bool {
      const Bitset cand = m.row(row) & mask;
      for (auto l = cand.find_first(); l != Bitset::npos; l = cand.find_next(l)) {
        if (seen[l]) continue;
        seen[l] = true;
        if (match_col[l] == m.rows() || self(self, match_col[l])) {
          match_col[l] = row;
          return true;
        }
      }
      return false;
    };
    if (augment(augment, k)) ++size;
  }
  return size;
}

class TriangularSearch {
 public:
  explicit TriangularSearch(const SupportPattern& m) : m_(m) {}

  // Longest triangular sequence whose columns all lie in `mask`. Once the
  // first row is chosen, the admissible columns shrink to mask minus that
  // row's support, so the value depends on `mask` alone.
  std::size_t solve(const Bitset& mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second.value;
    const std::size_t bound = matching_bound(m_, mask);
    Entry best{0, m_.rows()};
    std::map<Bitset, std::size_t> children;  // next mask -> first row reaching it
    for (std::size_t k = 0; k < m_.rows() && best.value < bound; ++k) {
      if (!m_.row(k).intersects(mask)) continue;
      Bitset next = mask - m_.row(k);
      if (!children.emplace(next, k).second) continue;
      const std::size_t v = 1 + solve(next);
      if (v > best.value) best = {v, k};
    }
    memo_.emplace(mask, best);
    return best.value;
  }

  TriangularResult witness(Bitset mask) {
    TriangularResult r;
    r.rank = solve(mask);
    while (true) {
      const Entry& e = memo_.at(mask);
      if (e.value == 0) break;
      const std::size_t k = e.row;
      const Bitset cand = m_.row(k) & mask;
      r.sequence.emplace_back(k, cand.find_first());
      mask -= m_.row(k);
      solve(mask);
    }
    // Each chosen row vanishes on the columns chosen after it; reversed, row
    // i vanishes on the columns of rows j < i.
    std::reverse(r.sequence.begin(), r.sequence.end());
    return r;
  }

 private:
  struct Entry {
    std::size_t value;
    std::size_t row;
  };
  const SupportPattern& m_;
  std::map<Bitset, Entry> memo_;
};

}  // namespace

TriangularResult triangular_rank_with_witness(const SupportPattern& m) {
  Bitset all(m.cols());
  all.set();
  TriangularSearch search(m);
  return search.witness(all);
}

std::size_t triangular_rank(const SupportPattern& m) {
  Bitset all(m.cols());
  all.set();
  TriangularSearch search(m);
  return search.solve(all);
}

}  // namespace psdrank
