#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "psdrank/exact/rational.hpp"

namespace psdrank {

// Element of a multi-quadratic field Q(sqrt p_1, ..., sqrt p_k).
//
// Stored as a sparse sum  sum_s c_s * sqrt(s)  over square-free positive
// integers s (s = 1 is the rational part). The square roots of distinct
// square-free integers are linearly independent over Q, so the
// representation is canonical: terms are sorted by s and no coefficient is
// zero. Products use sqrt(a)*sqrt(b) = g*sqrt(ab/g^2) with g = gcd(a, b), so
// values built from different generator sets combine without an explicit
// promotion step.
class MultiQuadScalar {
 public:
  using Term = std::pair<std::uint64_t, Rational>;

  MultiQuadScalar() = default;
  MultiQuadScalar(const Rational& r);  // NOLINT(google-explicit-constructor)
  MultiQuadScalar(long v) : MultiQuadScalar(Rational(v)) {}  // NOLINT
  MultiQuadScalar(int v) : MultiQuadScalar(Rational(v)) {}   // NOLINT

  // coefficient * sqrt(radicand); radicand must be square-free.
  static MultiQuadScalar surd(const Rational& coefficient, std::uint64_t radicand);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  Rational rational_part() const;

  // Sorted primes whose square roots appear in this value.
  std::vector<std::uint64_t> generators() const;

  MultiQuadScalar inverse() const;

  MultiQuadScalar& operator+=(const MultiQuadScalar& o);
  MultiQuadScalar& operator-=(const MultiQuadScalar& o);
  MultiQuadScalar& operator*=(const MultiQuadScalar& o);
  MultiQuadScalar& operator/=(const MultiQuadScalar& o) { return *this *= o.inverse(); }

  friend MultiQuadScalar operator+(MultiQuadScalar a, const MultiQuadScalar& b) { return a += b; }
  friend MultiQuadScalar operator-(MultiQuadScalar a, const MultiQuadScalar& b) { return a -= b; }
  friend MultiQuadScalar operator*(const MultiQuadScalar& a, const MultiQuadScalar& b);
  friend MultiQuadScalar operator/(const MultiQuadScalar& a, const MultiQuadScalar& b) {
    return a * b.inverse();
  }
  MultiQuadScalar operator-() const;

  friend bool operator==(const MultiQuadScalar& a, const MultiQuadScalar& b) {
    return a.terms_ == b.terms_;
  }

  // Human readable, e.g. "2*sqrt(3)", "1 - 1/2*sqrt(6)".
  std::string str() const;

 private:
  void add_term(std::uint64_t key, const Rational& c);
  std::vector<Term> terms_;
};

inline bool is_zero(const MultiQuadScalar& x) { return x.is_zero(); }
inline std::string to_string(const MultiQuadScalar& x) { return x.str(); }

// Square-free decomposition n = f^2 * s of a positive integer.
struct SquareFreeParts {
  Integer square_root_factor;  // f
  std::uint64_t square_free;   // s
};
SquareFreeParts square_free_decompose(const Integer& n);

// Exact square root of a nonnegative rational as a multi-quadratic scalar:
// r = a/b gives sqrt(ab)/b = (f/b) sqrt(s). Throws on negative input.
MultiQuadScalar sqrt_embed(const Rational& r);

}  // namespace psdrank
