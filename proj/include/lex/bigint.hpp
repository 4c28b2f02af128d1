// bigint.hpp -- exact integer and rational arithmetic used for all counts.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, unsigned exponent);

/// Natural log of a positive integer, accurate to double precision for any size.
double log_big(const BigInt& x);
/// ln(p/q) = ln p - ln q. Requires x > 0.
double log_rational(const Rational& x);
double to_double(const Rational& x);

std::string to_decimal(const BigInt& x);
/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_fraction_string(const Rational& x);

/// Parses "p/q" or "p" into an exact rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Largest r >= 0 with r^k <= x.
BigInt integer_root(const BigInt& x, unsigned k);

} // namespace lex
