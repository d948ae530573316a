#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ewrithe/random.h"
#include "ewrithe/writhe.h"

namespace ewrithe {

/// A link whose coefficients are polynomials in one rational parameter.
struct CurveFamily {
  std::string parameter = "tau";
  /// components[c][coord][k]: coefficient of t^k as a polynomial in the
  /// parameter.
  std::vector<Vec4<std::vector<UPoly>>> components;
  std::optional<std::vector<int>> orientations;
  std::vector<Rational> grid;

  Link member(const Rational& value) const;
};

struct TrialRecord {
  /// Center, transform or sample used, printable.
  std::string subject;
  int value = 0;
  int expected = 0;
  bool ok = false;
};

struct VerificationRun {
  std::string property;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> records;
  bool passed = false;
  /// Value the trials are compared against, when there is one.
  std::optional<int> reference;
  /// Every writhe value seen.
  std::set<int> attained;
};

/// Random integer matrix with entries in [-5, 5] and determinant sign
/// `orientation`.
ProjectiveTransform random_transform(Rng& rng, int orientation);

/// Writhe from a generic center sampled with `seed`.
int sampled_writhe(const Link& link, std::uint64_t seed);

VerificationRun verify_center_independence(const Link& link, int trials, std::uint64_t seed);
/// `trials` orientation-preserving transforms (writhe kept) followed by
/// `trials` orientation-reversing ones (writhe negated).
VerificationRun verify_isotopy_invariance(const Link& link, int trials, std::uint64_t seed);
/// |Cw| <= (d-1)(d-2)/2 and Cw congruent to that bound mod 2 on random
/// curves of degree d.
VerificationRun verify_parity_bounds(int degree, int samples, std::uint64_t seed);

struct FamilyMember {
  Rational value;
  std::optional<int> writhe;
  /// Why the member was flagged singular; empty for regular members.
  std::string singular;
};

struct FamilyJump {
  Rational from;
  Rational to;
  int delta = 0;
  /// A singular member lies strictly between the two.
  bool across_singular = false;
};

std::vector<FamilyMember> scan_family(const CurveFamily& family, const std::vector<Rational>& grid, std::uint64_t seed);
/// Differences between consecutive regular members.
std::vector<FamilyJump> family_jumps(const std::vector<FamilyMember>& scan);

}  // namespace ewrithe
