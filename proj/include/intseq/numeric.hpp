#pragma once

// Arbitrary-precision scalars and exact decimal rendering of integer ratios.

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstddef>
#include <string>

namespace intseq {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt pow10(int exponent) {
  return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent));
}

/// Bit length of |x|; zero has length 0.
inline std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

/// num/den as a double without forming the reduced rational; safe for
/// operands far beyond double range as long as the quotient is representable.
inline double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (num == 0) return 0.0;
  if (den == 0) return num > 0 ? HUGE_VAL : -HUGE_VAL;
  long num_exp = 0;
  long den_exp = 0;
  const double n = mpz_get_d_2exp(&num_exp, num.backend().data());
  const double d = mpz_get_d_2exp(&den_exp, den.backend().data());
  return std::ldexp(n / d, static_cast<int>(num_exp - den_exp));
}

inline double to_double(const Rational& q) {
  return ratio_to_double(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

namespace detail {

// round(num / den * 10^places) with ties to even; num, den > 0.
inline BigInt round_scaled(const BigInt& num, const BigInt& den, int places) {
  BigInt n = num;
  BigInt d = den;
  if (places >= 0) {
    n *= pow10(places);
  } else {
    d *= pow10(-places);
  }
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(n, d, q, r);
  const BigInt twice = 2 * r;
  if (twice > d || (twice == d && boost::multiprecision::bit_test(q, 0))) ++q;
  return q;
}

// Render magnitude * 10^-places.
inline std::string place_point(const BigInt& magnitude, int places, bool negative) {
  std::string digits = magnitude.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
  } else if (places < 0 && magnitude != 0) {
    digits.append(static_cast<std::size_t>(-places), '0');
  }
  if (negative && magnitude != 0) digits.insert(0, 1, '-');
  return digits;
}

}  // namespace detail

/// floor(log10(num/den)) for num, den > 0.
inline int decimal_exponent(const BigInt& num, const BigInt& den) {
  const double approx =
      (static_cast<double>(bit_length(num)) - static_cast<double>(bit_length(den))) * 0.30102999566398120;
  int e = static_cast<int>(std::floor(approx));
  auto at_least = [&](int exponent) {  // num/den >= 10^exponent
    return exponent >= 0 ? num >= den * pow10(exponent) : num * pow10(-exponent) >= den;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;
  return e;
}

/// Fixed-point rendering with `places` digits after the point, round-half-even.
/// Throws nothing; den must be nonzero.
inline std::string to_fixed(const BigInt& num, const BigInt& den, int places) {
  const bool negative = (num < 0) != (den < 0);
  const BigInt q = detail::round_scaled(boost::multiprecision::abs(num), boost::multiprecision::abs(den), places);
  return detail::place_point(q, places, negative);
}

/// Rendering with `digits` significant digits, round-half-even. Large values
/// are padded with zeros rather than switched to exponent notation.
inline std::string to_significant(const BigInt& num, const BigInt& den, int digits) {
  if (num == 0) return digits > 1 ? "0." + std::string(static_cast<std::size_t>(digits - 1), '0') : "0";
  const bool negative = (num < 0) != (den < 0);
  const BigInt n = boost::multiprecision::abs(num);
  const BigInt d = boost::multiprecision::abs(den);
  int places = digits - 1 - decimal_exponent(n, d);
  BigInt q = detail::round_scaled(n, d, places);
  if (q >= pow10(digits)) {  // rounding carried into a new leading digit
    --places;
    q = detail::round_scaled(n, d, places);
  }
  return detail::place_point(q, places, negative);
}

inline std::string to_fixed(const Rational& x, int places) {
  return to_fixed(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x), places);
}

inline std::string to_significant(const Rational& x, int digits) {
  return to_significant(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x), digits);
}

/// The rational with `digits` significant decimal digits nearest to x.
inline Rational round_significant(const Rational& x, int digits) {
  if (x == 0) return x;
  const BigInt n = boost::multiprecision::abs(boost::multiprecision::numerator(x));
  const BigInt d = boost::multiprecision::denominator(x);
  const int places = digits - 1 - decimal_exponent(n, d);
  const BigInt q = detail::round_scaled(n, d, places) * (x < 0 ? -1 : 1);
  return places >= 0 ? Rational(q, pow10(places)) : Rational(q * pow10(-places));
}

/// Parses "p", "-p" or "p/q" (q nonzero).
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

inline std::string to_string(const Rational& x) { return x.str(); }

}  // namespace intseq
