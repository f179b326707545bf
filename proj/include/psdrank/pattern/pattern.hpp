#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "psdrank/exact/matrix.hpp"

namespace psdrank {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Boolean m x n matrix, one bitset per row. Bit (k, l) is set for the
// nonzero entries of the matrix the pattern was taken from.
class SupportPattern {
 public:
  SupportPattern() = default;
  SupportPattern(std::size_t rows, std::size_t cols) : cols_(cols), bits_(rows, Bitset(cols)) {}

  static SupportPattern all_ones(std::size_t rows, std::size_t cols);
  static SupportPattern identity(std::size_t n);
  // Row-major 0/1 values; `bits.size()` must equal rows * cols.
  static SupportPattern from_bits(std::size_t rows, std::size_t cols, const std::vector<bool>& bits);

  std::size_t rows() const { return bits_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t k, std::size_t l) const { return bits_[k][l]; }
  void set(std::size_t k, std::size_t l, bool v = true) { bits_[k][l] = v; }

  const Bitset& row(std::size_t k) const { return bits_[k]; }
  Bitset column(std::size_t l) const;

  std::size_t count_ones() const;
  std::size_t count_zeros() const { return rows() * cols() - count_ones(); }

  SupportPattern complement() const;
  SupportPattern transpose() const;
  SupportPattern submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

  // 0/1 rational matrix with this pattern.
  ExactMatrix to_matrix() const;

  friend bool operator==(const SupportPattern& a, const SupportPattern& b) {
    return a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Bitset> bits_;
};

template <typename T>
SupportPattern support(const Matrix<T>& m) {
  SupportPattern p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) p.set(i, j);
  return p;
}

// Pattern text format: the matrix format with 0/1 entries. Any other value
// is rejected.
SupportPattern read_pattern(std::istream& in);
void write_pattern(std::ostream& out, const SupportPattern& p);

}  // namespace psdrank
