#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ewrithe/curve.h"
#include "ewrithe/triangular.h"

namespace ewrithe {

enum class LocusKind { Crossing, Solitary, InterComponentCrossing };

const char* to_string(LocusKind kind);

/// A real double point of the projection. For i == j the point holds
/// (e, f) = (s + t, s t) of the two preimage parameters; for i < j it holds
/// (s, t), the parameters on components i and j.
struct DoublePointLocus {
  std::size_t i = 0;
  std::size_t j = 0;
  LocusKind kind = LocusKind::Crossing;
  AlgebraicPoint point;
};

struct GenericityCertificate {
  bool simple_roots = false;
  bool no_triple_points = false;
  bool no_tangential_pairs = false;
  bool transversal_crossings = false;
  bool no_infinity_parameters = false;
  bool center_off_curve = false;
  bool center_off_singular_lines = false;

  bool generic() const;
  /// Names of the failing flags, comma separated.
  std::string failures() const;
};

/// Double-point data of one component: the symmetric minors of the
/// projected coordinates (X, Y, W) in (e, f), and their solutions.
struct ComponentSystem {
  std::size_t component = 0;
  std::array<BPoly, 3> minors;
  TriangularSystem system;
};

/// Coincidences P_i(s) ~ P_j(t) of projected points, in (s, t).
struct PairSystem {
  std::size_t i = 0;
  std::size_t j = 0;
  std::array<BPoly, 3> minors;
  TriangularSystem system;
};

/// A link seen from a center: transformed so that the center is
/// canonical_center() (and reparametrized if a double point sat at t = oo),
/// with its double-point systems and genericity certificate.
struct Projection {
  Link link;
  ProjectiveTransform transform = ProjectiveTransform::identity();
  Vec4<Rational> center;
  std::vector<ComponentSystem> components;
  std::vector<PairSystem> pairs;
  GenericityCertificate certificate;

  /// Complex double points of the projected link, counted once each.
  int complex_double_points() const;
};

/// (0 : 0 : 1 : 0): projecting from it drops Z, (x, y, z) -> (x, y).
Vec4<Rational> canonical_center();

/// Orientation-preserving transform sending c to canonical_center(),
/// applied to the link. Throws CenterOnCurve or InvalidInput (c = 0).
std::pair<Link, ProjectiveTransform> normalize_center(const Link& link, const Vec4<Rational>& c);

/// Symmetric double-point system of a normalized curve.
ComponentSystem double_point_system(const RationalSpaceCurve& curve);
/// Projected coincidence system of two normalized curves.
PairSystem inter_component_system(const RationalSpaceCurve& a, const RationalSpaceCurve& b);

/// Normalizes, solves and certifies. Throws CenterOnCurve; every other
/// genericity failure is reported in the certificate.
Projection project(const Link& link, const Vec4<Rational>& center);

/// Real loci of a generic projection, ordered by component pair and then
/// by position. Throws TangentialPair, CenterOnSingularLine or
/// NonGenericProjection when the certificate has failed flags.
std::vector<DoublePointLocus> classify_double_points(const Projection& projection);

GenericityCertificate genericity_check(const Link& link, const Vec4<Rational>& center);

/// Integer centers from [-B, B]^4 with B doubling; deterministic in seed.
/// Throws Error(SamplingExhausted).
Vec4<Rational> sample_generic_center(const Link& link, std::uint64_t seed);
/// Same search, returning the certified projection.
Projection sample_generic_projection(const Link& link, std::uint64_t seed);

}  // namespace ewrithe
