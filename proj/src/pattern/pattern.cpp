#include "psdrank/pattern/pattern.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "psdrank/exact/matrix_io.hpp"

namespace psdrank {

SupportPattern SupportPattern::all_ones(std::size_t rows, std::size_t cols) {
  SupportPattern p(rows, cols);
  for (auto& r : p.bits_) r.set();
  return p;
}

SupportPattern SupportPattern::identity(std::size_t n) {
  SupportPattern p(n, n);
  for (std::size_t i = 0; i < n; ++i) p.set(i, i);
  return p;
}

SupportPattern SupportPattern::from_bits(std::size_t rows, std::size_t cols, const std::vector<bool>& bits) {
  if (bits.size() != rows * cols) throw std::invalid_argument("SupportPattern: bit count mismatch");
  SupportPattern p(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) p.set(i, j, bits[i * cols + j]);
  return p;
}

Bitset SupportPattern::column(std::size_t l) const {
  Bitset c(rows());
  for (std::size_t k = 0; k < rows(); ++k) c[k] = bits_[k][l];
  return c;
}

std::size_t SupportPattern::count_ones() const {
  std::size_t n = 0;
  for (const auto& r : bits_) n += r.count();
  return n;
}

SupportPattern SupportPattern::complement() const {
  SupportPattern p(*this);
  for (auto& r : p.bits_) r.flip();
  return p;
}

SupportPattern SupportPattern::transpose() const {
  SupportPattern t(cols(), rows());
  for (std::size_t k = 0; k < rows(); ++k)
    for (std::size_t l = 0; l < cols(); ++l) t.set(l, k, get(k, l));
  return t;
}

SupportPattern SupportPattern::submatrix(const std::vector<std::size_t>& row_idx,
                                         const std::vector<std::size_t>& col_idx) const {
  SupportPattern s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s.set(i, j, get(row_idx.at(i), col_idx.at(j)));
  return s;
}

ExactMatrix SupportPattern::to_matrix() const {
  ExactMatrix m(rows(), cols());
  for (std::size_t k = 0; k < rows(); ++k)
    for (std::size_t l = 0; l < cols(); ++l)
      if (get(k, l)) m(k, l) = 1;
  return m;
}

SupportPattern read_pattern(std::istream& in) {
  const ExactMatrix m = read_matrix(in);
  for (const auto& x : m.data())
    if (x != 0 && x != 1) throw std::invalid_argument("pattern: entries must be 0 or 1");
  return support(m);
}

void write_pattern(std::ostream& out, const SupportPattern& p) { write_matrix(out, p.to_matrix()); }

}  // namespace psdrank
