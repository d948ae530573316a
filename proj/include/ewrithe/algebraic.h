#pragma once

#include <span>
#include <string>
#include <vector>

#include "ewrithe/bpoly.h"
#include "ewrithe/upoly.h"

namespace ewrithe {

struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rational width() const { return hi - lo; }
};

/// Enclosure of p over [box.lo, box.hi] by interval Horner evaluation.
RationalInterval evaluate(const UPoly& p, const RationalInterval& box);

/// Sturm chain of a square-free polynomial, stored as primitive integer
/// polynomials (positive rescalings of the classical chain).
class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);

  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;
  /// Number of distinct real roots in (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  int count_real_roots() const;
  std::size_t length() const { return chain_.size(); }

 private:
  std::vector<std::vector<Integer>> chain_;
};

/// Real algebraic number: the unique root of a square-free rational
/// polynomial inside an isolating interval. A degenerate interval
/// lo == hi denotes the rational root lo itself; otherwise neither endpoint
/// is a root and the root lies strictly inside.
class AlgebraicNumber {
 public:
  /// Validates the invariants with a Sturm count; throws Error(InvalidInput).
  AlgebraicNumber(UPoly defining, Rational lo, Rational hi);
  static AlgebraicNumber rational(const Rational& value);
  /// Skips validation; the caller guarantees the invariants.
  static AlgebraicNumber trusted(UPoly defining, Rational lo, Rational hi);

  const UPoly& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  RationalInterval interval() const { return {lo_, hi_}; }
  bool is_exact() const { return lo_ == hi_; }

  /// One bisection step (may land exactly on the root).
  AlgebraicNumber bisected() const;
  /// Bisects until the interval is no wider than max_width.
  AlgebraicNumber refined(const Rational& max_width) const;
  double approx() const;

 private:
  AlgebraicNumber() = default;
  UPoly defining_;
  Rational lo_;
  Rational hi_;
};

/// Isolates every real root of a square-free polynomial, ascending, with
/// pairwise disjoint intervals. Throws Error(InvalidInput) if p is zero or
/// not square-free.
std::vector<AlgebraicNumber> isolate_real_roots(const UPoly& p);

/// Exact sign of p at an algebraic number. Vanishing is decided first
/// (gcd with the defining polynomial plus a Sturm count on the interval);
/// otherwise the interval is bisected until the enclosure of p excludes 0.
int certified_sign(const UPoly& p, const AlgebraicNumber& at);

/// A point of Q-bar^n in triangular (primitive element) form: every
/// coordinate equals numerator_i(theta) / denominator(theta), where theta
/// is an AlgebraicNumber and the denominator does not vanish at theta.
class AlgebraicPoint {
 public:
  AlgebraicPoint(AlgebraicNumber theta, std::vector<UPoly> numerators, UPoly denominator);
  static AlgebraicPoint from_rationals(std::span<const Rational> coords);
  /// Coordinates given as algebraic numbers; at most one may be irrational.
  static AlgebraicPoint from_numbers(std::span<const AlgebraicNumber> coords);

  const AlgebraicNumber& theta() const { return theta_; }
  const std::vector<UPoly>& numerators() const { return numerators_; }
  const UPoly& denominator() const { return denominator_; }
  int denominator_sign() const { return den_sign_; }
  std::size_t dimension() const { return numerators_.size(); }

  /// Enclosure of one coordinate no wider than max_width.
  RationalInterval enclosure(std::size_t coord, const Rational& max_width) const;
  double approx(std::size_t coord) const;

 private:
  AlgebraicNumber theta_;
  std::vector<UPoly> numerators_;
  UPoly denominator_;
  int den_sign_ = 1;
};

/// den^m * p(xn/den, yn/den) reduced modulo `modulus`, m = total degree of p.
UPoly substitute_mod(const BPoly& p, const UPoly& xn, const UPoly& yn, const UPoly& den, const UPoly& modulus);

/// Numerator N(theta) = den^m * p(x, y) with m = total degree of p, reduced
/// modulo the defining polynomial of theta. p's x and y are the point's
/// coordinates 0 and 1.
UPoly numerator_at(const BPoly& p, const AlgebraicPoint& at);

/// Exact sign of p at the point (coordinates 0 and 1).
int certified_sign(const BPoly& p, const AlgebraicPoint& at);

/// True when p vanishes at the point.
bool vanishes_at(const BPoly& p, const AlgebraicPoint& at);

std::string to_string(const AlgebraicNumber& a);

}  // namespace ewrithe
