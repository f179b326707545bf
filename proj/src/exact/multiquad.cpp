#include "psdrank/exact/multiquad.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace psdrank {

namespace {

std::vector<std::uint64_t> prime_factors_square_free(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t p = 0;
  if (__builtin_mul_overflow(a, b, &p) || (p >> 63)) throw std::overflow_error("MultiQuadScalar: radicand overflow");
  return p;
}

}  // namespace

MultiQuadScalar::MultiQuadScalar(const Rational& r) {
  if (!r.is_zero()) terms_.emplace_back(1, r);
}

MultiQuadScalar MultiQuadScalar::surd(const Rational& coefficient, std::uint64_t radicand) {
  if (radicand == 0) return {};
  MultiQuadScalar x;
  if (!coefficient.is_zero()) x.terms_.emplace_back(radicand, coefficient);
  return x;
}

Rational MultiQuadScalar::rational_part() const {
  if (!terms_.empty() && terms_[0].first == 1) return terms_[0].second;
  return Rational(0);
}

std::vector<std::uint64_t> MultiQuadScalar::generators() const {
  std::vector<std::uint64_t> gens;
  for (const auto& [key, c] : terms_) {
    auto f = prime_factors_square_free(key);
    gens.insert(gens.end(), f.begin(), f.end());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

void MultiQuadScalar::add_term(std::uint64_t key, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, key, c);
  }
}

MultiQuadScalar& MultiQuadScalar::operator+=(const MultiQuadScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MultiQuadScalar& MultiQuadScalar::operator-=(const MultiQuadScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

MultiQuadScalar operator*(const MultiQuadScalar& a, const MultiQuadScalar& b) {
  MultiQuadScalar r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const std::uint64_t g = std::gcd(ka, kb);
      r.add_term(checked_mul(ka / g, kb / g), ca * cb * Rational(Integer(g)));
    }
  }
  return r;
}

MultiQuadScalar& MultiQuadScalar::operator*=(const MultiQuadScalar& o) {
  *this = *this * o;
  return *this;
}

MultiQuadScalar MultiQuadScalar::operator-() const {
  MultiQuadScalar r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiQuadScalar MultiQuadScalar::inverse() const {
  if (is_zero()) throw std::domain_error("MultiQuadScalar: division by zero");
  if (is_rational()) return MultiQuadScalar(Rational(1) / terms_[0].second);

  // x = a + b sqrt(p) with a, b free of sqrt(p); x * (a - b sqrt(p)) lies in
  // the subfield without sqrt(p) and is nonzero by linear independence.
  const std::uint64_t p = generators().back();
  MultiQuadScalar a;
  MultiQuadScalar b_sqrt_p;
  for (const auto& [k, c] : terms_) {
    if (k % p == 0) {
      b_sqrt_p.add_term(k, c);
    } else {
      a.add_term(k, c);
    }
  }
  const MultiQuadScalar conj = a - b_sqrt_p;
  const MultiQuadScalar norm = a * a - b_sqrt_p * b_sqrt_p;
  return conj * norm.inverse();
}

std::string MultiQuadScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 1) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += "sqrt(" + std::to_string(k) + ")";
    }
  }
  return out;
}

SquareFreeParts square_free_decompose(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("square_free_decompose: nonpositive input");
  Integer rest = n;
  Integer f = 1;
  Integer s = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e % 2 == 1) s *= p;
  }
  s *= rest;
  if (s > Integer(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("square_free_decompose: square-free part too large");
  return {f, s.convert_to<std::uint64_t>()};
}

MultiQuadScalar sqrt_embed(const Rational& r) {
  if (r < 0) throw std::invalid_argument("sqrt_embed: negative input");
  if (r.is_zero()) return {};
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  const auto parts = square_free_decompose(num * den);
  return MultiQuadScalar::surd(Rational(parts.square_root_factor, den), parts.square_free);
}

}  // namespace psdrank
