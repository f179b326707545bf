#include "psdrank/psd/factorization.hpp"

#include <stdexcept>

namespace psdrank {

ExactMatrix PsdFactorization::product() const {
  ExactMatrix s(A.size(), B.size());
  for (std::size_t k = 0; k < A.size(); ++k)
    for (std::size_t l = 0; l < B.size(); ++l) s(k, l) = trace_of_product(A[k], B[l]);
  return s;
}

PsdCertificate psd_certificate(const ExactMatrix& m) {
  PsdCertificate cert;
  if (!m.is_symmetric()) return cert;
  ExactMatrix w = m;
  const std::size_t n = m.rows();
  std::vector<bool> active(n, true);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (w(i, i) < 0) return cert;
      if (pivot == n && w(i, i) > 0) pivot = i;
    }
    if (pivot == n) {
      // All remaining diagonal entries vanish; psd forces the block to be 0.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (active[i] && active[j] && !w(i, j).is_zero()) return cert;
      for (std::size_t i = 0; i < n; ++i)
        if (active[i]) cert.pivots.emplace_back(0);
      break;
    }
    const Rational d = w(pivot, pivot);
    cert.pivots.push_back(d);
    active[pivot] = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || w(i, pivot).is_zero()) continue;
      const Rational f = w(i, pivot) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (active[j]) w(i, j) -= f * w(pivot, j);
    }
  }
  cert.psd = true;
  return cert;
}

FactorizationReport verify_psd_factorization(const PsdFactorization& f, const ExactMatrix& s) {
  if (f.A.size() != s.rows() || f.B.size() != s.cols())
    throw std::invalid_argument("verify_psd_factorization: factor count does not match matrix shape");
  auto check_order = [&](const ExactMatrix& x) {
    if (x.rows() != f.order || x.cols() != f.order)
      throw std::invalid_argument("verify_psd_factorization: factor is not order x order");
  };
  FactorizationReport r;
  for (const auto& a : f.A) {
    check_order(a);
    r.a_psd.push_back(is_psd(a));
  }
  for (const auto& b : f.B) {
    check_order(b);
    r.b_psd.push_back(is_psd(b));
  }
  for (std::size_t k = 0; k < s.rows(); ++k)
    for (std::size_t l = 0; l < s.cols(); ++l)
      if (trace_of_product(f.A[k], f.B[l]) != s(k, l)) r.mismatches.emplace_back(k, l);
  r.passed = r.mismatches.empty();
  for (bool ok : r.a_psd) r.passed = r.passed && ok;
  for (bool ok : r.b_psd) r.passed = r.passed && ok;
  return r;
}

}  // namespace psdrank
