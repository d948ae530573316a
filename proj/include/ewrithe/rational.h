#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ewrithe {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n" or "p/q" (surrounding whitespace allowed). Throws
/// Error(ParseError) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Canonical n / d (d != 0).
Rational ratio(long n, long d);

inline int sign(const Rational& value) { return sgn(value); }
inline int sign(const Integer& value) { return sgn(value); }

/// Rational 2^k for any integer k.
Rational power_of_two(long k);

/// Smallest k with |value| <= 2^k (value nonzero).
long ceil_log2(const Rational& value);

/// A Gaussian rational a + b i.
struct GaussianRational {
  Rational re;
  Rational im;

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);

}  // namespace ewrithe
