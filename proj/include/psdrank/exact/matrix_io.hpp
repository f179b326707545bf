#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "psdrank/exact/matrix.hpp"

namespace psdrank {

// Text format: first line `m n`, then m lines of n whitespace-separated
// entries `p` or `p/q` (q > 0). `#` starts a comment that runs to the end of
// the line. Throws std::invalid_argument on malformed input.
ExactMatrix read_matrix(std::istream& in);
ExactMatrix parse_matrix(std::string_view text);

void write_matrix(std::ostream& out, const ExactMatrix& m);
std::string format_matrix(const ExactMatrix& m);

// Streams one row at a time in the same format; the caller writes the header.
void write_matrix_header(std::ostream& out, std::size_t rows, std::size_t cols);
void write_matrix_row(std::ostream& out, const std::vector<Rational>& row);

// Non-comment whitespace tokens of a stream, in order.
std::vector<std::string> tokenize(std::istream& in);

}  // namespace psdrank
