#include "psdrank/exact/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace psdrank {

std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

namespace {

std::size_t parse_count(const std::string& tok) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("matrix: bad dimension '" + tok + "'");
  }
  if (pos != tok.size() || tok[0] == '-') throw std::invalid_argument("matrix: bad dimension '" + tok + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

ExactMatrix read_matrix(std::istream& in) {
  const auto tokens = tokenize(in);
  if (tokens.size() < 2) throw std::invalid_argument("matrix: missing `m n` header");
  const std::size_t m = parse_count(tokens[0]);
  const std::size_t n = parse_count(tokens[1]);
  if (tokens.size() != 2 + m * n)
    throw std::invalid_argument("matrix: expected " + std::to_string(m * n) + " entries, found " +
                                std::to_string(tokens.size() - 2));
  ExactMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = parse_rational(tokens[2 + i * n + j]);
  return a;
}

ExactMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

void write_matrix_header(std::ostream& out, std::size_t rows, std::size_t cols) {
  out << rows << ' ' << cols << '\n';
}

void write_matrix_row(std::ostream& out, const std::vector<Rational>& row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) out << ' ';
    out << to_string(row[j]);
  }
  out << '\n';
}

void write_matrix(std::ostream& out, const ExactMatrix& m) {
  write_matrix_header(out, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    write_matrix_row(out, std::vector<Rational>(r.begin(), r.end()));
  }
}

std::string format_matrix(const ExactMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace psdrank
