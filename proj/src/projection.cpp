#include "ewrithe/projection.h"

#include <optional>

#include "ewrithe/error.h"
#include "ewrithe/random.h"

namespace ewrithe {

namespace {

constexpr int kReparamAttempts = 8;
constexpr int kCentersPerBound = 16;
constexpr int kBoundDoublings = 5;
constexpr std::array<int, 3> kProjected{kX, kY, kW};

const BPoly& discriminant_ef() {
  static const BPoly d = BPoly::x() * BPoly::x() - BPoly::constant(4) * BPoly::y();
  return d;
}

std::array<Rational, 3> projected(const Vec4<Rational>& v) { return {v[kX], v[kY], v[kW]}; }

bool independent3(const std::array<Rational, 3>& p, const std::array<Rational, 3>& q) {
  return p[0] * q[1] - p[1] * q[0] != 0 || p[0] * q[2] - p[2] * q[0] != 0 || p[1] * q[2] - p[2] * q[1] != 0;
}

// gcd of the minors of [v; (X, Y, W)(t)].
UPoly projected_coincidence(const std::array<Rational, 3>& v, const RationalSpaceCurve& c) {
  UPoly g;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) g = gcd(g, c.coord(kProjected[b]) * v[a] - c.coord(kProjected[a]) * v[b]);
  }
  return g;
}

bool center_on_curve(const RationalSpaceCurve& c, const Vec4<Rational>& center) {
  Vec4<Rational> top = evaluate_at_infinity(c);
  bool proportional = true;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) proportional = proportional && top[i] * center[j] == top[j] * center[i];
  }
  if (proportional) return true;
  UPoly g;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) g = gcd(g, c.coord(j) * center[i] - c.coord(i) * center[j]);
  }
  return g.degree() > 0;
}

// No projected double point or projected cusp involves t = oo.
bool infinity_clear(const Link& link) {
  const auto& cs = link.components;
  for (std::size_t a = 0; a < cs.size(); ++a) {
    const auto top = projected(evaluate_at_infinity(cs[a]));
    if (cs[a].degree() >= 1 && !independent3(top, projected(cs[a].coefficient(cs[a].degree() - 1)))) return false;
    for (std::size_t b = 0; b < cs.size(); ++b) {
      if (projected_coincidence(top, cs[b]).degree() > 0) return false;
      if (b > a && !independent3(top, projected(evaluate_at_infinity(cs[b])))) return false;
    }
  }
  return true;
}

Link reparametrized(const Link& link, const MoebiusReparam& m) {
  std::vector<RationalSpaceCurve> cs;
  for (const auto& c : link.components) cs.push_back(reparametrize(c, m));
  return Link(std::move(cs), link.orientations);
}

MoebiusReparam random_moebius(Rng& rng) {
  while (true) {
    Rational a(rng.uniform(-3, 3));
    Rational b(rng.uniform(-3, 3));
    Rational c(rng.uniform(1, 3));
    Rational d(rng.uniform(-3, 3));
    const Rational det = a * d - b * c;
    if (det == 0) continue;
    if (det < 0) {
      a = -a;
      b = -b;
    }
    return MoebiusReparam(a, b, c, d);
  }
}

BPoly jacobian(const BPoly& p, const BPoly& q) { return p.dx() * q.dy() - p.dy() * q.dx(); }

// Eliminant factor where all three 2x2 Jacobian minors vanish.
UPoly singular_factor(const TriangularSystem& sys, const std::array<BPoly, 3>& g) {
  UPoly bad = sys.eliminant;
  const std::array<BPoly, 3> js{jacobian(g[0], g[1]), jacobian(g[0], g[2]), jacobian(g[1], g[2])};
  for (const auto& j : js) {
    if (bad.degree() <= 0) break;
    bad = gcd(bad, sys.reduce(j));
  }
  return bad;
}

TriangularSystem restricted(const TriangularSystem& sys, const UPoly& factor) {
  TriangularSystem out = sys;
  out.eliminant = factor;
  if (factor.degree() <= 0) return out;
  out.x_num = remainder(sys.x_num, factor);
  out.y_num = remainder(sys.y_num, factor);
  out.den = remainder(sys.den, factor);
  return out;
}

// Res_w(T(w), c2(w) u^2 + c1(w) u + c0(w)) as a polynomial in u.
UPoly parameter_polynomial(const UPoly& t, const UPoly& c2, const UPoly& c1, const UPoly& c0) {
  if (t.degree() <= 0) return UPoly::constant(1);
  const BPoly u = BPoly::y();
  const BPoly q = BPoly::in_x(c2) * u * u + BPoly::in_x(c1) * u + BPoly::in_x(c0);
  return resultant(BPoly::in_x(t), q, Var::X);
}

UPoly same_parameters(const TriangularSystem& s) { return parameter_polynomial(s.eliminant, s.den, -s.x_num, s.y_num); }

}  // namespace

const char* to_string(LocusKind kind) {
  switch (kind) {
    case LocusKind::Crossing:
      return "crossing";
    case LocusKind::Solitary:
      return "solitary";
    case LocusKind::InterComponentCrossing:
      return "inter-component crossing";
  }
  return "?";
}

bool GenericityCertificate::generic() const {
  return simple_roots && no_triple_points && no_tangential_pairs && transversal_crossings && no_infinity_parameters &&
         center_off_curve && center_off_singular_lines;
}

std::string GenericityCertificate::failures() const {
  std::string out;
  auto add = [&out](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  add(simple_roots, "simple-roots");
  add(no_triple_points, "no-triple-points");
  add(no_tangential_pairs, "no-tangential-pairs");
  add(transversal_crossings, "transversal-crossings");
  add(no_infinity_parameters, "no-infinity-parameters");
  add(center_off_curve, "center-off-curve");
  add(center_off_singular_lines, "center-off-singular-lines");
  return out;
}

int Projection::complex_double_points() const {
  int n = 0;
  for (const auto& c : components) n += c.system.solution_count();
  for (const auto& p : pairs) n += p.system.solution_count();
  return n;
}

Vec4<Rational> canonical_center() { return {0, 0, 1, 0}; }

std::pair<Link, ProjectiveTransform> normalize_center(const Link& link, const Vec4<Rational>& c) {
  int m = c[kZ] != 0 ? kZ : -1;
  for (int i = 0; m < 0 && i < 4; ++i) {
    if (c[i] != 0) m = i;
  }
  if (m < 0) throw Error(ErrorKind::InvalidInput, "projection center is the zero vector");
  for (std::size_t k = 0; k < link.components.size(); ++k) {
    if (center_on_curve(link.components[k], c)) {
      throw Error(ErrorKind::CenterOnCurve, "center lies on component " + std::to_string(k));
    }
  }
  // B has columns e_j (j != Z, m), c in column Z and e_Z in column m, so
  // that B e_Z = c; the inverse is the normalizing map.
  RationalMatrix b(4, std::vector<Rational>(4));
  for (int j = 0; j < 4; ++j) b[j][j] = 1;
  for (int r = 0; r < 4; ++r) b[r][kZ] = c[r];
  if (m != kZ) {
    for (int r = 0; r < 4; ++r) b[r][m] = r == kZ ? 1 : 0;
  }
  ProjectiveTransform basis(b);
  if (basis.orientation() < 0) {
    const int col = m != kZ ? m : kX;
    for (int r = 0; r < 4; ++r) b[r][col] = -b[r][col];
    basis = ProjectiveTransform(b);
  }
  ProjectiveTransform t = basis.inverse();
  return {apply_transform(link, t).link, t};
}

ComponentSystem double_point_system(const RationalSpaceCurve& curve) {
  ComponentSystem out;
  out.minors = {symmetric_minor(curve.coord(kX), curve.coord(kY)), symmetric_minor(curve.coord(kX), curve.coord(kW)),
                symmetric_minor(curve.coord(kY), curve.coord(kW))};
  out.system = triangularize({out.minors.begin(), out.minors.end()});
  return out;
}

PairSystem inter_component_system(const RationalSpaceCurve& a, const RationalSpaceCurve& b) {
  PairSystem out;
  int k = 0;
  for (int p = 0; p < 3; ++p) {
    for (int q = p + 1; q < 3; ++q) {
      const int i = kProjected[p];
      const int j = kProjected[q];
      out.minors[k++] = cross_minor(a.coord(i), a.coord(j), b.coord(i), b.coord(j));
    }
  }
  out.system = triangularize({out.minors.begin(), out.minors.end()});
  return out;
}

Projection project(const Link& link, const Vec4<Rational>& center) {
  Projection proj;
  proj.center = center;
  auto [normalized, transform] = normalize_center(link, center);
  proj.transform = transform;
  GenericityCertificate& cert = proj.certificate;
  cert.center_off_curve = true;

  Rng rng(0);
  for (int attempt = 0; !infinity_clear(normalized); ++attempt) {
    if (attempt == kReparamAttempts) {
      proj.link = normalized;
      return proj;
    }
    normalized = reparametrized(normalized, random_moebius(rng));
  }
  cert.no_infinity_parameters = true;
  proj.link = normalized;

  const auto& cs = proj.link.components;
  try {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      auto sys = double_point_system(cs[i]);
      sys.component = i;
      proj.components.push_back(std::move(sys));
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        auto sys = inter_component_system(cs[i], cs[j]);
        sys.i = i;
        sys.j = j;
        proj.pairs.push_back(std::move(sys));
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateElimination) throw;
    proj.components.clear();
    proj.pairs.clear();
    return proj;
  }

  cert.simple_roots = true;
  cert.transversal_crossings = true;
  cert.no_tangential_pairs = true;
  for (const auto& c : proj.components) {
    const UPoly bad = singular_factor(c.system, c.minors);
    if (bad.degree() > 0) {
      cert.simple_roots = false;
      for (const auto& pt : restricted(c.system, bad).real_solutions()) {
        if (certified_sign(discriminant_ef(), pt) > 0) cert.transversal_crossings = false;
      }
    }
    if (c.system.vanishing_factor(discriminant_ef()).degree() > 0) cert.no_tangential_pairs = false;
  }
  for (const auto& p : proj.pairs) {
    const UPoly bad = singular_factor(p.system, p.minors);
    if (bad.degree() > 0) {
      cert.simple_roots = false;
      if (!restricted(p.system, bad).real_solutions().empty()) cert.transversal_crossings = false;
    }
  }

  // Every parameter value may occur in one locus only; a repeated parameter
  // is a triple point (or a branch through a singular line).
  cert.no_triple_points = true;
  cert.center_off_singular_lines = true;
  std::vector<UPoly> params(cs.size(), UPoly::constant(1));
  for (const auto& c : proj.components) {
    const auto& sys = c.system;
    if (sys.solution_count() == 0) continue;
    const auto& p = cs[c.component].coords();
    UPoly space = sys.eliminant;
    for (int other : {kX, kY, kW}) {
      if (space.degree() <= 0) break;
      space = gcd(space, sys.reduce(symmetric_minor(p[kZ], p[other])));
    }
    if (space.degree() > 0) {
      const UPoly rest = exact_quotient(sys.eliminant, space);
      const UPoly us = same_parameters(restricted(sys, space));
      const UPoly ur = same_parameters(restricted(sys, rest));
      if (!coprime(us, ur)) cert.center_off_singular_lines = false;
    }
    params[c.component] = params[c.component] * same_parameters(sys);
  }
  for (const auto& p : proj.pairs) {
    const auto& sys = p.system;
    if (sys.solution_count() == 0) continue;
    params[p.i] = params[p.i] * parameter_polynomial(sys.eliminant, UPoly{}, sys.den, -sys.x_num);
    params[p.j] = params[p.j] * parameter_polynomial(sys.eliminant, UPoly{}, sys.den, -sys.y_num);
  }
  for (const auto& u : params) {
    if (u.degree() > 0 && !is_squarefree(u)) cert.no_triple_points = false;
  }
  return proj;
}

std::vector<DoublePointLocus> classify_double_points(const Projection& projection) {
  const auto& cert = projection.certificate;
  if (!cert.generic()) {
    if (!cert.no_tangential_pairs) throw Error(ErrorKind::TangentialPair, "a double point has coinciding preimages");
    if (!cert.center_off_singular_lines) {
      throw Error(ErrorKind::CenterOnSingularLine, "center lies on a line through conjugate singular points");
    }
    throw Error(ErrorKind::NonGenericProjection, "projection is not generic", cert.failures());
  }
  std::vector<DoublePointLocus> out;
  for (const auto& c : projection.components) {
    for (auto& pt : c.system.real_solutions()) {
      const int s = certified_sign(discriminant_ef(), pt);
      if (s == 0) throw Error(ErrorKind::TangentialPair, "real double point with coinciding preimages");
      out.push_back({c.component, c.component, s > 0 ? LocusKind::Crossing : LocusKind::Solitary, std::move(pt)});
    }
  }
  for (const auto& p : projection.pairs) {
    for (auto& pt : p.system.real_solutions()) out.push_back({p.i, p.j, LocusKind::InterComponentCrossing, std::move(pt)});
  }
  return out;
}

GenericityCertificate genericity_check(const Link& link, const Vec4<Rational>& center) {
  try {
    return project(link, center).certificate;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CenterOnCurve) throw;
    return {};
  }
}

Projection sample_generic_projection(const Link& link, std::uint64_t seed) {
  Rng rng(seed);
  long bound = 2;
  for (int round = 0; round < kBoundDoublings; ++round, bound *= 2) {
    for (int k = 0; k < kCentersPerBound; ++k) {
      Vec4<Rational> c;
      bool zero = true;
      for (auto& x : c) {
        x = Rational(rng.uniform(-bound, bound));
        zero = zero && x == 0;
      }
      if (zero) continue;
      try {
        Projection p = project(link, c);
        if (p.certificate.generic()) return p;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CenterOnCurve) throw;
      }
    }
  }
  throw Error(ErrorKind::SamplingExhausted, "no generic projection center found");
}

Vec4<Rational> sample_generic_center(const Link& link, std::uint64_t seed) {
  return sample_generic_projection(link, seed).center;
}

}  // namespace ewrithe
