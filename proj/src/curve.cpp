#include "ewrithe/curve.h"

#include <algorithm>
#include <sstream>

#include "ewrithe/error.h"
#include "ewrithe/random.h"
#include "ewrithe/triangular.h"

namespace ewrithe {

namespace {

constexpr int kSampleAttempts = 200;

GaussianRational inverse(const GaussianRational& z) {
  const Rational n = z.re * z.re + z.im * z.im;
  return {z.re / n, -z.im / n};
}

UPoly minor(const UPoly& a, const UPoly& b, const UPoly& c, const UPoly& d) { return a * d - b * c; }

// Rank of two rational 4-vectors is 2.
bool independent(const Vec4<Rational>& p, const Vec4<Rational>& q) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] * q[j] - p[j] * q[i] != 0) return true;
    }
  }
  return false;
}

// gcd of the six minors of [v; P(t)] (v constant).
UPoly coincidence_with_point(const Vec4<Rational>& v, const RationalSpaceCurve& c) {
  UPoly g;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) g = gcd(g, c.coord(j) * v[i] - c.coord(i) * v[j]);
  }
  return g;
}

}  // namespace

RationalSpaceCurve::RationalSpaceCurve(Vec4<UPoly> coords) : coords_(std::move(coords)) {
  degree_ = -1;
  for (const auto& c : coords_) degree_ = std::max(degree_, c.degree());
  if (degree_ < 0) throw Error(ErrorKind::InvalidInput, "all four coordinates are zero");
}

Vec4<Rational> RationalSpaceCurve::coefficient(int k) const {
  return {coords_[0].coeff(k), coords_[1].coeff(k), coords_[2].coeff(k), coords_[3].coeff(k)};
}

Link::Link(std::vector<RationalSpaceCurve> cs, std::optional<std::vector<int>> o)
    : components(std::move(cs)), orientations(std::move(o)) {
  if (components.empty()) throw Error(ErrorKind::InvalidInput, "a link needs at least one component");
  if (orientations) {
    if (orientations->size() != components.size()) {
      throw Error(ErrorKind::InvalidInput, "one orientation flag per component is required");
    }
    for (int f : *orientations) {
      if (f != 1 && f != -1) throw Error(ErrorKind::InvalidInput, "orientation flags must be +1 or -1");
    }
  }
}

ProjectiveTransform::ProjectiveTransform(RationalMatrix m) : m_(std::move(m)) {
  if (m_.size() != 4) throw Error(ErrorKind::InvalidInput, "projective transforms are 4x4");
  for (const auto& row : m_) {
    if (row.size() != 4) throw Error(ErrorKind::InvalidInput, "projective transforms are 4x4");
  }
  det_ = ewrithe::determinant(m_);
  if (det_ == 0) throw Error(ErrorKind::SingularMatrix, "transform is not invertible");
}

ProjectiveTransform ProjectiveTransform::identity() { return diagonal({1, 1, 1, 1}); }

ProjectiveTransform ProjectiveTransform::diagonal(const Vec4<Rational>& d) {
  RationalMatrix m(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i) m[i][i] = d[i];
  return ProjectiveTransform(std::move(m));
}

ProjectiveTransform ProjectiveTransform::inverse() const {
  RationalMatrix a = m_;
  RationalMatrix inv(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i) inv[i][i] = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (int j = 0; j < 4; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return ProjectiveTransform(std::move(inv));
}

Vec4<Rational> ProjectiveTransform::apply(const Vec4<Rational>& p) const {
  Vec4<Rational> out;
  for (int r = 0; r < 4; ++r) {
    out[r] = 0;
    for (int c = 0; c < 4; ++c) out[r] += m_[r][c] * p[c];
  }
  return out;
}

ProjectiveTransform ProjectiveTransform::operator*(const ProjectiveTransform& other) const {
  RationalMatrix m(4, std::vector<Rational>(4));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      for (int k = 0; k < 4; ++k) m[r][c] += m_[r][k] * other.m_[k][c];
    }
  }
  return ProjectiveTransform(std::move(m));
}

MoebiusReparam::MoebiusReparam(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (determinant() == 0) throw Error(ErrorKind::SingularMatrix, "Moebius map is not invertible");
}

Rational MoebiusReparam::operator()(const Rational& t) const {
  const Rational den = c * t + d;
  if (den == 0) throw Error(ErrorKind::InvalidInput, "parameter maps to infinity");
  return (a * t + b) / den;
}

BPoly symmetric_minor(const UPoly& a, const UPoly& b) {
  const int n = std::max(a.degree(), b.degree());
  // h[k] = (s^k - t^k) / (s - t) in (e, f).
  std::vector<BPoly> h(static_cast<std::size_t>(std::max(n, 1)) + 1);
  h[0] = BPoly{};
  h[1] = BPoly::constant(1);
  for (int k = 2; k <= n; ++k) h[k] = BPoly::x() * h[k - 1] - BPoly::y() * h[k - 2];
  BPoly out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < i; ++j) {
      const Rational c = a.coeff(i) * b.coeff(j) - a.coeff(j) * b.coeff(i);
      if (c == 0) continue;
      out += BPoly::monomial(c, 0, j) * h[i - j];
    }
  }
  return out;
}

BPoly cross_minor(const UPoly& pi, const UPoly& pj, const UPoly& qi, const UPoly& qj) {
  return BPoly::in_x(pi) * BPoly::in_y(qj) - BPoly::in_x(pj) * BPoly::in_y(qi);
}

ValidationReport inspect(const RationalSpaceCurve& curve) {
  ValidationReport rep;
  rep.degree = curve.degree();
  const auto& p = curve.coords();

  UPoly g;
  for (const auto& c : p) g = gcd(g, c);
  rep.reduced = g.degree() == 0;
  if (!rep.reduced) {
    rep.witness = to_string(g);
    return rep;
  }

  UPoly m;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) m = gcd(m, minor(p[i], p[j], p[i].derivative(), p[j].derivative()));
  }
  const int d = curve.degree();
  const bool at_infinity = d == 0 ? false : independent(curve.coefficient(d), curve.coefficient(d - 1));
  rep.immersion = m.degree() == 0 && at_infinity;
  if (!rep.immersion) {
    rep.witness = m.degree() > 0 ? to_string(m) : "parameter at infinity";
    return rep;
  }

  const UPoly inf = coincidence_with_point(evaluate_at_infinity(curve), curve);
  if (!isolate_real_roots(squarefree_part(inf)).empty()) {
    rep.witness = "P(infinity) = P(t) for a root of " + to_string(inf);
    return rep;
  }
  std::vector<BPoly> eqs;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) eqs.push_back(symmetric_minor(p[i], p[j]));
  }
  try {
    const TriangularSystem sys = triangularize(eqs);
    const auto real = sys.real_solutions();
    if (!real.empty()) {
      rep.witness = "double point at (s+t, st) = root of " + to_string(sys.eliminant, "w");
      return rep;
    }
    rep.imaginary_singular_pairs = sys.solution_count();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateElimination) throw;
    rep.witness = "parametrization is not generically injective";
    return rep;
  }
  rep.no_real_singularities = true;
  return rep;
}

ValidationReport validate(const RationalSpaceCurve& curve) {
  ValidationReport rep = inspect(curve);
  if (!rep.reduced) throw Error(ErrorKind::ReducibleParametrization, "coordinates share a factor", rep.witness);
  if (!rep.immersion) throw Error(ErrorKind::CuspDetected, "parametrization is not an immersion", rep.witness);
  if (!rep.no_real_singularities) throw Error(ErrorKind::RealSingularityDetected, "curve has a real singular point", rep.witness);
  return rep;
}

void validate(const Link& link) {
  if (link.components.empty()) throw Error(ErrorKind::InvalidInput, "a link needs at least one component");
  if (link.orientations && link.orientations->size() != link.components.size()) {
    throw Error(ErrorKind::InvalidInput, "one orientation flag per component is required");
  }
  for (const auto& c : link.components) validate(c);
  const auto n = link.components.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& p = link.components[a];
      const auto& q = link.components[b];
      const std::string which = "components " + std::to_string(a) + " and " + std::to_string(b);
      if (!independent(evaluate_at_infinity(p), evaluate_at_infinity(q)) ||
          !isolate_real_roots(squarefree_part(coincidence_with_point(evaluate_at_infinity(p), q))).empty() ||
          !isolate_real_roots(squarefree_part(coincidence_with_point(evaluate_at_infinity(q), p))).empty()) {
        throw Error(ErrorKind::ComponentsIntersect, which + " meet at a parameter at infinity");
      }
      std::vector<BPoly> eqs;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) eqs.push_back(cross_minor(p.coord(i), p.coord(j), q.coord(i), q.coord(j)));
      }
      try {
        const TriangularSystem sys = triangularize(eqs);
        if (!sys.real_solutions().empty()) {
          throw Error(ErrorKind::ComponentsIntersect, which + " share a point", to_string(sys.eliminant, "w"));
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateElimination) throw;
        throw Error(ErrorKind::ComponentsIntersect, which + " share a curve");
      }
    }
  }
}

Vec4<Rational> evaluate(const RationalSpaceCurve& curve, const Rational& t) {
  Vec4<Rational> out;
  for (int i = 0; i < 4; ++i) out[i] = curve.coord(i)(t);
  return out;
}

Vec4<GaussianRational> evaluate(const RationalSpaceCurve& curve, const GaussianRational& t) {
  Vec4<GaussianRational> out;
  for (int i = 0; i < 4; ++i) out[i] = curve.coord(i)(t);
  return out;
}

AlgebraicPoint evaluate(const RationalSpaceCurve& curve, const AlgebraicNumber& t) {
  return AlgebraicPoint(t, std::vector<UPoly>(curve.coords().begin(), curve.coords().end()), UPoly::constant(1));
}

Vec4<Rational> evaluate_at_infinity(const RationalSpaceCurve& curve) { return curve.coefficient(curve.degree()); }

Vec4<Rational> tangent(const RationalSpaceCurve& curve, const Rational& t) {
  Vec4<Rational> out;
  for (int i = 0; i < 4; ++i) out[i] = curve.coord(i).derivative()(t);
  return out;
}

Vec4<GaussianRational> tangent(const RationalSpaceCurve& curve, const GaussianRational& t) {
  Vec4<GaussianRational> out;
  for (int i = 0; i < 4; ++i) out[i] = curve.coord(i).derivative()(t);
  return out;
}

std::array<Rational, 3> affine_tangent(const RationalSpaceCurve& curve, const Rational& t) {
  const auto p = evaluate(curve, t);
  const auto v = tangent(curve, t);
  if (p[kW] == 0) throw Error(ErrorKind::InvalidInput, "point lies at infinity of the chart W = 1");
  const Rational w2 = p[kW] * p[kW];
  return {(v[0] * p[kW] - p[0] * v[kW]) / w2, (v[1] * p[kW] - p[1] * v[kW]) / w2, (v[2] * p[kW] - p[2] * v[kW]) / w2};
}

std::array<GaussianRational, 3> affine_tangent(const RationalSpaceCurve& curve, const GaussianRational& t) {
  const auto p = evaluate(curve, t);
  const auto v = tangent(curve, t);
  if (p[kW] == GaussianRational{0, 0}) throw Error(ErrorKind::InvalidInput, "point lies at infinity of the chart W = 1");
  const GaussianRational inv = inverse(p[kW] * p[kW]);
  std::array<GaussianRational, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = (v[i] * p[kW] - p[i] * v[kW]) * inv;
  return out;
}

RationalSpaceCurve apply_transform(const RationalSpaceCurve& curve, const ProjectiveTransform& t) {
  Vec4<UPoly> out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[r] += curve.coord(c) * t.matrix()[r][c];
  }
  return RationalSpaceCurve(std::move(out));
}

TransformedLink apply_transform(const Link& link, const ProjectiveTransform& t) {
  std::vector<RationalSpaceCurve> cs;
  for (const auto& c : link.components) cs.push_back(apply_transform(c, t));
  return {Link(std::move(cs), link.orientations), t.orientation()};
}

RationalSpaceCurve reparametrize(const RationalSpaceCurve& curve, const MoebiusReparam& m) {
  const int d = curve.degree();
  const UPoly num{m.b, m.a};
  const UPoly den{m.d, m.c};
  std::vector<UPoly> num_pow{UPoly::constant(1)};
  std::vector<UPoly> den_pow{UPoly::constant(1)};
  for (int k = 1; k <= d; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Vec4<UPoly> out;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k <= d; ++k) {
      const Rational c = curve.coord(i).coeff(k);
      if (c != 0) out[i] += num_pow[k] * den_pow[d - k] * c;
    }
  }
  return RationalSpaceCurve(std::move(out));
}

RationalSpaceCurve sample_random_curve(int degree, std::uint64_t seed, int bound) {
  if (degree < 1) throw Error(ErrorKind::InvalidInput, "curve degree must be positive");
  if (bound < 1) throw Error(ErrorKind::InvalidInput, "coefficient bound must be positive");
  Rng rng(seed);
  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    Vec4<UPoly> coords;
    for (auto& c : coords) {
      std::vector<Rational> v;
      for (int k = 0; k <= degree; ++k) v.emplace_back(rng.uniform(-bound, bound));
      c = UPoly(std::move(v));
    }
    if (std::all_of(coords.begin(), coords.end(), [](const UPoly& c) { return c.is_zero(); })) continue;
    RationalSpaceCurve curve(std::move(coords));
    if (curve.degree() != degree) continue;
    if (inspect(curve).valid()) return curve;
  }
  throw Error(ErrorKind::SamplingExhausted, "no valid curve of degree " + std::to_string(degree) + " within the retry budget");
}

std::string to_string(const RationalSpaceCurve& curve) {
  std::ostringstream out;
  out << "(" << to_string(curve.coord(0)) << " : " << to_string(curve.coord(1)) << " : " << to_string(curve.coord(2))
      << " : " << to_string(curve.coord(3)) << ")";
  return out.str();
}

}  // namespace ewrithe
