#include "ewrithe/verify.h"

#include <sstream>

#include "ewrithe/error.h"

namespace ewrithe {

namespace {

std::string describe(const Vec4<Rational>& c) {
  std::ostringstream out;
  out << "(" << to_string(c[0]) << " : " << to_string(c[1]) << " : " << to_string(c[2]) << " : " << to_string(c[3]) << ")";
  return out.str();
}

std::string describe(const ProjectiveTransform& t) {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < 4; ++r) {
    if (r > 0) out << "; ";
    for (int c = 0; c < 4; ++c) out << (c > 0 ? " " : "") << to_string(t.matrix()[r][c]);
  }
  out << "] det " << to_string(t.determinant());
  return out.str();
}

void finish(VerificationRun& run) {
  run.passed = !run.records.empty();
  for (const auto& r : run.records) {
    run.passed = run.passed && r.ok;
    run.attained.insert(r.value);
  }
}

}  // namespace

Link CurveFamily::member(const Rational& value) const {
  std::vector<RationalSpaceCurve> cs;
  for (const auto& comp : components) {
    Vec4<UPoly> coords;
    for (int i = 0; i < 4; ++i) {
      std::vector<Rational> v;
      for (const auto& c : comp[i]) v.push_back(c(value));
      coords[i] = UPoly(std::move(v));
    }
    cs.emplace_back(std::move(coords));
  }
  return Link(std::move(cs), orientations);
}

ProjectiveTransform random_transform(Rng& rng, int orientation) {
  while (true) {
    RationalMatrix m(4, std::vector<Rational>(4));
    for (auto& row : m) {
      for (auto& x : row) x = Rational(rng.uniform(-5, 5));
    }
    const Rational det = determinant(m);
    if (det == 0) continue;
    if (sign(det) != orientation) {
      for (auto& x : m[0]) x = -x;
    }
    return ProjectiveTransform(std::move(m));
  }
}

int sampled_writhe(const Link& link, std::uint64_t seed) {
  return writhe_unoriented(build_diagram(sample_generic_projection(link, seed)));
}

VerificationRun verify_center_independence(const Link& link, int trials, std::uint64_t seed) {
  VerificationRun run;
  run.property = "center independence";
  run.seed = seed;
  for (int i = 0; i < trials; ++i) {
    const Projection p = sample_generic_projection(link, derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int w = writhe_unoriented(build_diagram(p));
    if (!run.reference) run.reference = w;
    run.records.push_back({describe(p.center), w, *run.reference, w == *run.reference});
  }
  finish(run);
  return run;
}

VerificationRun verify_isotopy_invariance(const Link& link, int trials, std::uint64_t seed) {
  VerificationRun run;
  run.property = "rigid isotopy invariance and mirror antisymmetry";
  run.seed = seed;
  const int reference = sampled_writhe(link, seed);
  run.reference = reference;
  Rng rng(seed);
  for (int orientation : {1, -1}) {
    for (int i = 0; i < trials; ++i) {
      const ProjectiveTransform t = random_transform(rng, orientation);
      const TransformedLink moved = apply_transform(link, t);
      const int w = sampled_writhe(moved.link, derive_seed(seed, static_cast<std::uint64_t>(i)));
      const int expected = moved.orientation * reference;
      run.records.push_back({describe(t), w, expected, w == expected});
    }
  }
  finish(run);
  return run;
}

VerificationRun verify_parity_bounds(int degree, int samples, std::uint64_t seed) {
  VerificationRun run;
  run.property = "parity and bound for degree " + std::to_string(degree);
  run.seed = seed;
  const int bound = (degree - 1) * (degree - 2) / 2;
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    const RationalSpaceCurve c = sample_random_curve(degree, s);
    const int w = sampled_writhe(Link(c), s);
    const bool ok = w >= -bound && w <= bound && (w - bound) % 2 == 0;
    run.records.push_back({to_string(c), w, bound, ok});
  }
  finish(run);
  return run;
}

std::vector<FamilyMember> scan_family(const CurveFamily& family, const std::vector<Rational>& grid, std::uint64_t seed) {
  std::vector<FamilyMember> out;
  for (const auto& value : grid) {
    FamilyMember m{value, std::nullopt, {}};
    try {
      const Link link = family.member(value);
      validate(link);
      m.writhe = sampled_writhe(link, seed);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::ReducibleParametrization:
        case ErrorKind::CuspDetected:
        case ErrorKind::RealSingularityDetected:
        case ErrorKind::ComponentsIntersect:
        case ErrorKind::InvalidInput:
          m.singular = to_string(e.kind());
          break;
        default:
          throw;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<FamilyJump> family_jumps(const std::vector<FamilyMember>& scan) {
  std::vector<FamilyJump> out;
  const FamilyMember* last = nullptr;
  bool singular_between = false;
  for (const auto& m : scan) {
    if (!m.writhe) {
      singular_between = true;
      continue;
    }
    if (last != nullptr) out.push_back({last->value, m.value, *m.writhe - *last->writhe, singular_between});
    last = &m;
    singular_between = false;
  }
  return out;
}

}  // namespace ewrithe
