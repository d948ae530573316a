#pragma once

#include <optional>
#include <vector>

#include "ewrithe/projection.h"

namespace ewrithe {

struct CrossingOptions {
  /// Exchange the roles of the two preimages.
  bool swap_preimages = false;
  /// Evaluate with both tangent vectors reversed (a component orientation
  /// flip seen from one crossing).
  bool reverse_tangents = false;
};

enum class Branch { Auto, Plus, Minus };

/// Local writhe of a real crossing of a normalized link: the sign of the
/// frame (tangent at a, chord a -> b, tangent at b) against the standard
/// orientation. Inter-component crossings include the orientation flags.
/// Throws ZeroDeterminant on a non-transversal crossing.
int crossing_sign(const Link& normalized, const DoublePointLocus& locus, const CrossingOptions& options = {});

/// Local writhe of a solitary double point of a normalized link. Auto picks
/// the conjugate preimage whose fiber orientation is +z; Plus and Minus
/// force t = (e +- i sqrt(4f - e^2)) / 2 and return the frame sign
/// corrected by that branch's fiber orientation. Throws ZeroDeterminant.
int solitary_sign(const Link& normalized, const DoublePointLocus& locus, Branch branch = Branch::Auto);

/// Which preimage of a crossing is nearer the center along the fiber: +1
/// when the first preimage ((e + sqrt(e^2 - 4f)) / 2, or the point on
/// component i) has the larger affine z, -1 for the second, 0 when either
/// preimage lies on W = 0.
int upper_preimage(const Link& normalized, const DoublePointLocus& locus);

struct SignedLocus {
  DoublePointLocus locus;
  int sign;
};

struct Diagram {
  std::vector<SignedLocus> loci;
  Vec4<Rational> center;
  ProjectiveTransform transform = ProjectiveTransform::identity();
  /// The normalized (and possibly reparametrized) link the signs refer to.
  Link link;
  GenericityCertificate certificate;
  int complex_double_points = 0;

  std::size_t component_count() const { return link.components.size(); }
  bool oriented() const { return link.orientations.has_value(); }
  int count(LocusKind kind) const;
};

Diagram build_diagram(const Projection& projection);
/// Projects from center; throws NonGenericProjection (or a more specific
/// kind) when the center is not generic.
Diagram build_diagram(const Link& link, const Vec4<Rational>& center);

/// Sum over solitary points and same-component crossings.
int writhe_unoriented(const Diagram& diagram);
/// Sum over all loci. Throws MissingOrientation.
int writhe_oriented(const Diagram& diagram);
/// Half the signed inter-component crossing count per pair, zero diagonal.
/// Throws MissingOrientation.
std::vector<std::vector<Rational>> linking_matrix(const Diagram& diagram);

struct WritheReport {
  int unoriented = 0;
  std::optional<int> oriented;
  std::optional<std::vector<std::vector<Rational>>> linking;
  int crossings = 0;
  int solitary = 0;
  int inter_crossings = 0;
};

WritheReport writhe_report(const Diagram& diagram);

}  // namespace ewrithe
