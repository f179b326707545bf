#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace psdrank {

// GMP-backed integers and rationals with expression templates disabled so
// that `auto` bindings hold values, not lazy expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// Parses `p` or `p/q` with q > 0. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Exact rational value of a finite double.
Rational from_double(double x);

}  // namespace psdrank
