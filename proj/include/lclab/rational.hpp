#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace lclab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rationals, always kept in reduced form with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// 2^k for any integer k (negative exponents give dyadic fractions).
Rational pow2(int k);

Rational rat_abs(const Rational& q);
Rational rat_min(const Rational& a, const Rational& b);
Rational rat_max(const Rational& a, const Rational& b);

BigInt rat_floor(const Rational& q);
BigInt rat_ceil(const Rational& q);

/// Serializes as "p/q" (denominator included even when it is 1).
std::string rat_str(const Rational& q);

/// Parses "p/q", plain integers, or decimals like "2.5".
std::optional<Rational> parse_rational(const std::string& s);

}  // namespace lclab
