#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ewrithe/algebraic.h"
#include "ewrithe/resultant.h"
#include "ewrithe/upoly.h"

namespace ewrithe {

template <typename T>
using Vec4 = std::array<T, 4>;

enum Coord { kX = 0, kY = 1, kZ = 2, kW = 3 };

/// Real rational curve t -> (X(t) : Y(t) : Z(t) : W(t)) in RP^3. The
/// homogeneous degree d is the largest coordinate degree; every coordinate
/// is read as a binary form of degree d in (t : u), so t = infinity is the
/// point (1 : 0).
class RationalSpaceCurve {
 public:
  explicit RationalSpaceCurve(Vec4<UPoly> coords);

  const Vec4<UPoly>& coords() const { return coords_; }
  const UPoly& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int degree() const { return degree_; }
  /// Coefficient vector of t^k (k <= degree).
  Vec4<Rational> coefficient(int k) const;

  friend bool operator==(const RationalSpaceCurve&, const RationalSpaceCurve&) = default;

 private:
  Vec4<UPoly> coords_;
  int degree_ = 0;
};

struct Link {
  std::vector<RationalSpaceCurve> components;
  /// +1 keeps the direction of increasing t, -1 reverses it.
  std::optional<std::vector<int>> orientations;

  Link() = default;
  explicit Link(RationalSpaceCurve c) { components.push_back(std::move(c)); }
  Link(std::vector<RationalSpaceCurve> cs, std::optional<std::vector<int>> o = std::nullopt);

  /// Orientation flag of component i, +1 when none are stored.
  int orientation(std::size_t i) const { return orientations ? (*orientations)[i] : 1; }
};

class ProjectiveTransform {
 public:
  /// Throws Error(SingularMatrix) unless the determinant is nonzero.
  explicit ProjectiveTransform(RationalMatrix m);
  static ProjectiveTransform identity();
  static ProjectiveTransform diagonal(const Vec4<Rational>& d);

  const RationalMatrix& matrix() const { return m_; }
  const Rational& determinant() const { return det_; }
  /// Sign of the determinant: +1 preserves the orientation of RP^3.
  int orientation() const { return sign(det_); }
  ProjectiveTransform inverse() const;
  Vec4<Rational> apply(const Vec4<Rational>& p) const;
  ProjectiveTransform operator*(const ProjectiveTransform& other) const;

 private:
  RationalMatrix m_;
  Rational det_;
};

/// Parameter change t -> (a t + b) / (c t + d).
struct MoebiusReparam {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  /// Throws Error(SingularMatrix) when ad - bc = 0.
  MoebiusReparam(Rational a_, Rational b_, Rational c_, Rational d_);
  Rational determinant() const { return a * d - b * c; }
  /// Image of a finite parameter (c t + d != 0 required).
  Rational operator()(const Rational& t) const;
};

struct ValidationReport {
  int degree = 0;
  bool reduced = false;
  bool immersion = false;
  bool no_real_singularities = false;
  /// Pairs {s, t} of non-real parameters with P(s) = P(t); each pair is
  /// counted once. Allowed, but they constrain projection centers.
  int imaginary_singular_pairs = 0;
  /// Failing witness polynomial, empty on success.
  std::string witness;

  bool valid() const { return reduced && immersion && no_real_singularities; }
};

/// Runs every check and never throws for geometric failures.
ValidationReport inspect(const RationalSpaceCurve& curve);
/// Throws ReducibleParametrization, CuspDetected or RealSingularityDetected
/// on the first failing check.
ValidationReport validate(const RationalSpaceCurve& curve);
/// Validates every component and that no two components share a real
/// point; throws
/// ComponentsIntersect, or InvalidInput on malformed orientation flags.
void validate(const Link& link);

Vec4<Rational> evaluate(const RationalSpaceCurve& curve, const Rational& t);
Vec4<GaussianRational> evaluate(const RationalSpaceCurve& curve, const GaussianRational& t);
/// Coordinates as elements of Q(t).
AlgebraicPoint evaluate(const RationalSpaceCurve& curve, const AlgebraicNumber& t);
/// P(1 : 0), the leading coefficient vector.
Vec4<Rational> evaluate_at_infinity(const RationalSpaceCurve& curve);

/// Homogeneous tangent P'(t).
Vec4<Rational> tangent(const RationalSpaceCurve& curve, const Rational& t);
Vec4<GaussianRational> tangent(const RationalSpaceCurve& curve, const GaussianRational& t);
/// Derivative of (X/W, Y/W, Z/W); throws Error(InvalidInput) when W(t) = 0.
std::array<Rational, 3> affine_tangent(const RationalSpaceCurve& curve, const Rational& t);
std::array<GaussianRational, 3> affine_tangent(const RationalSpaceCurve& curve, const GaussianRational& t);

struct TransformedLink {
  Link link;
  /// Orientation class of the transform: writhe is multiplied by this.
  int orientation;
};

RationalSpaceCurve apply_transform(const RationalSpaceCurve& curve, const ProjectiveTransform& t);
TransformedLink apply_transform(const Link& link, const ProjectiveTransform& t);

/// Curve s -> P(M(s)), same point set and degree. The parameter direction
/// reverses exactly when det M < 0.
RationalSpaceCurve reparametrize(const RationalSpaceCurve& curve, const MoebiusReparam& m);

/// Random integer curve of exact degree d with coefficients in
/// [-bound, bound] passing validate(); deterministic in seed. Throws
/// Error(SamplingExhausted) after the retry budget.
RationalSpaceCurve sample_random_curve(int degree, std::uint64_t seed, int bound = 5);

/// (a(s) b(t) - a(t) b(s)) / (s - t) written in e = s + t, f = s t
/// (x = e, y = f).
BPoly symmetric_minor(const UPoly& a, const UPoly& b);

/// p_i(s) q_j(t) - p_j(s) q_i(t) with x = s, y = t.
BPoly cross_minor(const UPoly& pi, const UPoly& pj, const UPoly& qi, const UPoly& qj);

std::string to_string(const RationalSpaceCurve& curve);

}  // namespace ewrithe
