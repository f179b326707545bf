#include "psdrank/psd/order3.hpp"

#include <numeric>

#include "psdrank/pattern/pattern.hpp"

namespace psdrank {

namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// Row checks of pattern `p` (rows are the lines under test); indices local.
std::vector<LineCheck> check_lines(const SupportPattern& p) {
  const SupportPattern pt = p.transpose();
  std::vector<LineCheck> checks;
  for (std::size_t k = 0; k < p.rows(); ++k) {
    LineCheck c;
    c.index = k;
    c.has_nonzero = p.row(k).any();
    std::vector<std::size_t> zeros;
    for (std::size_t l = 0; l < p.cols(); ++l)
      if (!p.get(k, l) && pt.row(l).any()) zeros.push_back(l);
    for (std::size_t a = 0; a < zeros.size() && !c.distinct_zero_pair; ++a)
      for (std::size_t b = a + 1; b < zeros.size(); ++b)
        if (pt.row(zeros[a]) != pt.row(zeros[b])) {
          c.distinct_zero_pair = std::make_pair(zeros[a], zeros[b]);
          break;
        }
    c.forced_rank_one = c.has_nonzero && c.distinct_zero_pair.has_value();
    checks.push_back(c);
  }
  return checks;
}

void to_global(std::vector<LineCheck>& checks, const std::vector<std::size_t>& own,
               const std::vector<std::size_t>& other) {
  for (auto& c : checks) {
    c.index = own[c.index];
    if (c.distinct_zero_pair) c.distinct_zero_pair = std::make_pair(other[c.distinct_zero_pair->first],
                                                                    other[c.distinct_zero_pair->second]);
  }
}

}  // namespace

Order3Certificate order3_exclusion(const ExactMatrix& s, const Order3Options& options) {
  Order3Certificate cert;
  cert.claim = "psd rank >= 4";
  cert.scope_rows = options.rows.value_or(iota_vec(s.rows()));
  cert.scope_cols = options.cols.value_or(iota_vec(s.cols()));

  const ExactMatrix sub = s.submatrix(cert.scope_rows, cert.scope_cols);
  for (const auto& x : sub.data())
    if (x < 0) {
      cert.reason = "matrix has negative entries";
      return cert;
    }

  const SupportPattern p = support(sub);
  cert.row_checks = check_lines(p);
  cert.col_checks = check_lines(p.transpose());
  to_global(cert.row_checks, cert.scope_rows, cert.scope_cols);
  to_global(cert.col_checks, cert.scope_cols, cert.scope_rows);
  for (const auto& c : cert.row_checks)
    if (c.forced_rank_one) cert.rows.push_back(c.index);
  for (const auto& c : cert.col_checks)
    if (c.forced_rank_one) cert.cols.push_back(c.index);

  if (cert.rows.empty() || cert.cols.empty()) {
    cert.reason = "no row or no column is forced to a rank-1 factor";
    return cert;
  }

  SqrtRankOptions sq;
  sq.cap = options.cap;
  sq.fix_sign = options.fix_sign;
  sq.threads = options.threads;
  try {
    cert.enumeration = min_sqrt_rank(s, cert.rows, cert.cols, sq);
  } catch (const EnumerationCapExceeded& e) {
    cert.reason = e.what();
    return cert;
  }
  if (cert.enumeration->min_rank >= 4) {
    cert.conclusive = true;
    cert.bound = 4;
    cert.reason = "every signed square root of S[K, L] has rank >= 4, but an order-3 factorization forces rank <= 3";
  } else {
    cert.reason = "some signed square root of S[K, L] has rank " + std::to_string(cert.enumeration->min_rank);
  }
  return cert;
}

ExactMatrix generate_sn(std::size_t n) {
  if (n == 0) throw std::invalid_argument("generate_sn: n must be positive");
  ExactMatrix s(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const auto d = static_cast<long long>(i) - static_cast<long long>(j);
      s(i - 1, j - 1) = Rational((d - 1) * (d - 2) / 2);
    }
  return s;
}

}  // namespace psdrank
