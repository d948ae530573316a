#pragma once

#include <string>
#include <vector>

#include "ewrithe/upoly.h"

namespace ewrithe {

enum class Var { X, Y };

/// Dense bivariate polynomial over Q in (x, y), stored as a polynomial in x
/// whose coefficients are polynomials in y: rows()[i] multiplies x^i.
class BPoly {
 public:
  BPoly() = default;
  explicit BPoly(std::vector<UPoly> rows);
  static BPoly constant(const Rational& c);
  static BPoly x();
  static BPoly y();
  static BPoly in_x(const UPoly& p);
  static BPoly in_y(const UPoly& p);
  static BPoly monomial(const Rational& c, int dx, int dy);

  bool is_zero() const { return rows_.empty(); }
  int degree_x() const { return static_cast<int>(rows_.size()) - 1; }
  int degree_y() const;
  int total_degree() const;
  const std::vector<UPoly>& rows() const { return rows_; }
  Rational coeff(int dx, int dy) const;

  UPoly at_x(const Rational& x0) const;  ///< polynomial in y
  UPoly at_y(const Rational& y0) const;  ///< polynomial in x
  Rational operator()(const Rational& x0, const Rational& y0) const;

  BPoly swapped() const;
  BPoly dx() const;
  BPoly dy() const;
  /// Substitutes y = w - shift * x; the result is a polynomial in (x, w).
  BPoly sheared(const Rational& shift) const;

  BPoly& operator+=(const BPoly& other);
  BPoly& operator-=(const BPoly& other);
  BPoly& operator*=(const Rational& c);

  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator-(const BPoly& a);
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend BPoly operator*(BPoly a, const Rational& c) { return a *= c; }
  friend BPoly operator*(const Rational& c, BPoly a) { return a *= c; }
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.rows_ == b.rows_; }

 private:
  void trim();
  std::vector<UPoly> rows_;
};

/// p(arg) for a univariate p and bivariate argument (Horner).
BPoly compose(const UPoly& p, const BPoly& arg);

std::string to_string(const BPoly& p, const std::string& xname = "x", const std::string& yname = "y");

}  // namespace ewrithe
