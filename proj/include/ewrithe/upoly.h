#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ewrithe/rational.h"

namespace ewrithe {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty vector and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);
  /// The polynomial t.
  static UPoly variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  GaussianRational operator()(const GaussianRational& x) const;
  UPoly derivative() const;
  /// p(t + shift).
  UPoly shifted(const Rational& shift) const;
  /// Divides by the leading coefficient.
  UPoly monic() const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const Rational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q; throws Error(InvalidInput) when b is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly remainder(const UPoly& a, const UPoly& b);
/// a / b, throwing Error(InvalidInput) unless the division is exact.
UPoly exact_quotient(const UPoly& a, const UPoly& b);

/// Scales p to integer coefficients with content 1 and positive leading
/// coefficient. Zero maps to zero.
UPoly primitive_part(const UPoly& p);

/// Greatest common divisor, normalised by primitive_part. gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// True when gcd(a, b) is a nonzero constant. Uses a modular fast path.
bool coprime(const UPoly& a, const UPoly& b);

/// p / gcd(p, p'), primitive. Throws Error(InvalidInput) on zero input.
UPoly squarefree_part(const UPoly& p);

bool is_squarefree(const UPoly& p);

/// Exact sign of p(x).
int sign_at(const UPoly& p, const Rational& x);

/// Product of (t - r) over the given rational roots.
UPoly from_roots(std::span<const Rational> roots);

std::string to_string(const UPoly& p, const std::string& var = "t");

}  // namespace ewrithe
