#include "lex/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace lex {

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log of a non-positive integer");
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 53) return std::log(x.convert_to<double>());
  // Keep the top 60 bits; the discarded tail changes the value by < 2^-59.
  const unsigned shift = bits - 60;
  BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double log_rational(const Rational& x) {
  return log_big(boost::multiprecision::numerator(x)) -
         log_big(boost::multiprecision::denominator(x));
}

double to_double(const Rational& x) {
  return x.convert_to<double>();
}

std::string to_decimal(const BigInt& x) { return x.str(); }

std::string to_fraction_string(const Rational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  }
}

BigInt integer_root(const BigInt& x, unsigned k) {
  if (x < 0) throw std::domain_error("root of a negative integer");
  if (k == 0) throw std::invalid_argument("zeroth root");
  if (x < 2 || k == 1) return x;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (boost::multiprecision::msb(x) / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) >> 1;
    if (ipow(mid, k) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

} // namespace lex
