#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace toughtree {

/// Exact fraction in lowest terms with arbitrary-precision parts.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p", "p/q" or a finite decimal such as "0.5".
Rational parse_rational(const std::string& text);

inline Rational floor_of(const Rational& r) {
  BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return Rational(q);
}

inline Rational ceil_of(const Rational& r) {
  Rational f = floor_of(r);
  return f == r ? f : f + 1;
}

}  // namespace toughtree
