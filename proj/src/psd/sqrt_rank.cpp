#include "psdrank/psd/sqrt_rank.hpp"

#include <algorithm>
#include <limits>

#include "psdrank/exact/elimination.hpp"
#include "psdrank/util/parallel.hpp"

namespace psdrank {

namespace {

struct Layout {
  std::vector<std::pair<std::size_t, std::size_t>> positions;  // full-matrix coordinates
  std::vector<std::pair<std::size_t, std::size_t>> local;      // submatrix coordinates
  std::vector<MultiQuadScalar> roots;
};

Layout layout_of(const ExactMatrix& s, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Layout lay;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Rational& v = s.at(rows[i], cols[j]);
      if (v < 0) throw std::invalid_argument("min_sqrt_rank: negative entry in selected submatrix");
      if (v.is_zero()) continue;
      lay.positions.emplace_back(rows[i], cols[j]);
      lay.local.emplace_back(i, j);
      lay.roots.push_back(sqrt_embed(v));
    }
  return lay;
}

// Position i is negated iff bit (z - 1 - i) of the mask is set, so integer
// order on masks is lexicographic order on sign vectors.
bool negated(std::uint64_t mask, std::size_t i, std::size_t z) { return (mask >> (z - 1 - i)) & 1U; }

MultiQuadMatrix build(const Layout& lay, std::size_t r, std::size_t c, std::uint64_t mask) {
  MultiQuadMatrix y(r, c);
  const std::size_t z = lay.roots.size();
  for (std::size_t i = 0; i < z; ++i) {
    const auto [a, b] = lay.local[i];
    y(a, b) = negated(mask, i, z) ? -lay.roots[i] : lay.roots[i];
  }
  return y;
}

struct ChunkResult {
  std::size_t min_rank = std::numeric_limits<std::size_t>::max();
  std::uint64_t mask = 0;
  std::map<std::size_t, std::uint64_t> histogram;
};

}  // namespace

MultiQuadMatrix signed_root_matrix(const ExactMatrix& s, const std::vector<std::size_t>& rows,
                                   const std::vector<std::size_t>& cols, const SignAssignment& signs) {
  const Layout lay = layout_of(s, rows, cols);
  if (signs.positions != lay.positions || signs.negative.size() != lay.positions.size())
    throw std::invalid_argument("signed_root_matrix: assignment does not match the submatrix");
  MultiQuadMatrix y(rows.size(), cols.size());
  for (std::size_t i = 0; i < lay.roots.size(); ++i) {
    const auto [a, b] = lay.local[i];
    y(a, b) = signs.negative[i] ? -lay.roots[i] : lay.roots[i];
  }
  return y;
}

SqrtRankResult min_sqrt_rank(const ExactMatrix& s, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols, const SqrtRankOptions& options) {
  const Layout lay = layout_of(s, rows, cols);
  const std::size_t z = lay.roots.size();
  if (z > options.cap || z > 62)
    throw EnumerationCapExceeded("min_sqrt_rank: " + std::to_string(z) + " nonzero entries exceed the cap of " +
                                 std::to_string(std::min<std::size_t>(options.cap, 62)));

  SqrtRankResult result;
  result.witness.positions = lay.positions;
  for (const auto& root : lay.roots) {
    auto g = root.generators();
    result.generators.insert(result.generators.end(), g.begin(), g.end());
  }
  std::sort(result.generators.begin(), result.generators.end());
  result.generators.erase(std::unique(result.generators.begin(), result.generators.end()), result.generators.end());

  if (z == 0) {
    result.min_rank = 0;
    result.assignments_checked = 1;
    result.rank_histogram[0] = 1;
    result.witness_matrix = MultiQuadMatrix(rows.size(), cols.size());
    return result;
  }

  const std::uint64_t total = options.fix_sign ? (std::uint64_t{1} << (z - 1)) : (std::uint64_t{1} << z);
  const unsigned threads = std::max(1U, options.threads);
  std::vector<ChunkResult> chunks(std::min<std::uint64_t>(threads, total));
  parallel_chunks(static_cast<std::size_t>(total), threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    ChunkResult& out = chunks[c];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const std::size_t rk = rank(build(lay, rows.size(), cols.size(), mask));
      ++out.histogram[rk];
      if (rk < out.min_rank) {
        out.min_rank = rk;
        out.mask = mask;
      }
    }
  });

  ChunkResult best;
  for (const auto& c : chunks) {
    for (const auto& [rk, count] : c.histogram) result.rank_histogram[rk] += count;
    if (c.min_rank < best.min_rank || (c.min_rank == best.min_rank && c.mask < best.mask)) {
      best.min_rank = c.min_rank;
      best.mask = c.mask;
    }
  }
  result.min_rank = best.min_rank;
  result.assignments_checked = total;
  result.witness.negative.resize(z);
  for (std::size_t i = 0; i < z; ++i) result.witness.negative[i] = negated(best.mask, i, z);
  result.witness_matrix = build(lay, rows.size(), cols.size(), best.mask);
  return result;
}

}  // namespace psdrank
