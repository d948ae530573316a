#include "ewrithe/writhe.h"

#include <algorithm>
#include <array>

#include "ewrithe/error.h"

namespace ewrithe {

namespace {

// Elements a + b r of Q(theta)[r] / (r^2 - delta), with r the positive
// square root of delta(theta) > 0. Polynomials in theta are kept reduced
// modulo its defining polynomial.
struct Quad {
  UPoly a;
  UPoly b;
};

struct Complex {
  Quad re;
  Quad im;
};

class QuadRing {
 public:
  QuadRing(AlgebraicNumber theta, UPoly delta) : theta_(std::move(theta)), delta_(reduce(delta)) {
    if (certified_sign(delta_, theta_) <= 0) throw Error(ErrorKind::TangentialPair, "preimages coincide");
  }

  UPoly reduce(const UPoly& p) const { return remainder(p, theta_.defining()); }
  Quad lift(const UPoly& p) const { return {reduce(p), UPoly{}}; }
  Quad root() const { return {UPoly{}, UPoly::constant(1)}; }

  Quad add(const Quad& x, const Quad& y) const { return {x.a + y.a, x.b + y.b}; }
  Quad sub(const Quad& x, const Quad& y) const { return {x.a - y.a, x.b - y.b}; }
  Quad neg(const Quad& x) const { return {-x.a, -x.b}; }
  Quad scale(const Quad& x, const Rational& c) const { return {x.a * c, x.b * c}; }
  Quad mul(const Quad& x, const Quad& y) const {
    return {reduce(x.a * y.a + reduce(x.b * y.b) * delta_), reduce(x.a * y.b + x.b * y.a)};
  }

  Complex add(const Complex& x, const Complex& y) const { return {add(x.re, y.re), add(x.im, y.im)}; }
  Complex sub(const Complex& x, const Complex& y) const { return {sub(x.re, y.re), sub(x.im, y.im)}; }
  Complex scale(const Complex& x, const Rational& c) const { return {scale(x.re, c), scale(x.im, c)}; }
  Complex mul(const Complex& x, const Complex& y) const {
    return {sub(mul(x.re, y.re), mul(x.im, y.im)), add(mul(x.re, y.im), mul(x.im, y.re))};
  }

  int sign(const Quad& x) const {
    const int sa = certified_sign(x.a, theta_);
    const int sb = certified_sign(x.b, theta_);
    if (sb == 0 || sa == sb) return sa;
    if (sa == 0) return sb;
    return sa * certified_sign(reduce(x.a * x.a - reduce(x.b * x.b) * delta_), theta_);
  }
  bool is_zero(const Complex& z) const { return sign(z.re) == 0 && sign(z.im) == 0; }

 private:
  AlgebraicNumber theta_;
  UPoly delta_;
};

// Homogeneous value and t-derivative of one coordinate at (T : U).
struct Jet {
  Complex value;
  Complex derivative;
};

class HomogeneousEvaluator {
 public:
  HomogeneousEvaluator(const QuadRing& ring, const Complex& t, const UPoly& u, int degree) : ring_(ring) {
    const Complex one{ring.lift(UPoly::constant(1)), Quad{}};
    std::vector<Complex> tpow{one};
    std::vector<Quad> upow{one.re};
    const Quad uq = ring.lift(u);
    for (int k = 1; k <= degree; ++k) {
      tpow.push_back(ring.mul(tpow.back(), t));
      upow.push_back(ring.mul(upow.back(), uq));
    }
    // T^k U^(d-k) and its T-derivative coefficient T^(k-1) U^(d-k).
    for (int k = 0; k <= degree; ++k) {
      const auto uk = static_cast<std::size_t>(degree - k);
      const auto& tk = tpow[static_cast<std::size_t>(k)];
      monomials_.push_back({ring.mul(tk.re, upow[uk]), ring.mul(tk.im, upow[uk])});
      if (k > 0) {
        const auto& tk1 = tpow[static_cast<std::size_t>(k - 1)];
        derivatives_.push_back({ring.mul(tk1.re, upow[uk]), ring.mul(tk1.im, upow[uk])});
      }
    }
  }

  Jet operator()(const UPoly& p) const {
    Jet j{{Quad{}, Quad{}}, {Quad{}, Quad{}}};
    for (int k = 0; k <= p.degree(); ++k) {
      const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      j.value = ring_.add(j.value, ring_.scale(monomials_[static_cast<std::size_t>(k)], c));
      if (k > 0) j.derivative = ring_.add(j.derivative, ring_.scale(derivatives_[static_cast<std::size_t>(k - 1)], c * k));
    }
    return j;
  }

 private:
  const QuadRing& ring_;
  std::vector<Complex> monomials_;
  std::vector<Complex> derivatives_;
};

// det of the 4x4 matrix with columns (c0, c1, c2, c3), expanded along the
// column pair (0, 3).
template <typename T, typename Mul, typename Sub, typename Add>
T laplace_det(const std::array<std::array<T, 4>, 4>& m, Mul mul, Sub sub, Add add) {
  static constexpr std::array<std::array<int, 4>, 6> splits{
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}, {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}}};
  T total{};
  for (const auto& [r0, r1, q0, q1] : splits) {
    const T outer = sub(mul(m[r0][0], m[r1][3]), mul(m[r1][0], m[r0][3]));
    const T inner = sub(mul(m[q0][1], m[q1][2]), mul(m[q1][1], m[q0][2]));
    // Sign of the split: rows {r0, r1} to columns {0, 3}.
    const bool negative = (r0 + r1 + 0 + 3) % 2 == 1;
    const T term = mul(outer, inner);
    total = negative ? sub(total, term) : add(total, term);
  }
  return total;
}

int same_component_crossing(const RationalSpaceCurve& curve, const AlgebraicPoint& pt, const CrossingOptions& opt) {
  const UPoly& xn = pt.numerators()[0];
  const UPoly& yn = pt.numerators()[1];
  const UPoly& den = pt.denominator();
  // s, t = (e +- sqrt(e^2 - 4f)) / 2 = (xn +- r) / (2 den), r^2 = xn^2 - 4 yn den.
  QuadRing ring(pt.theta(), xn * xn - UPoly::constant(4) * yn * den);
  const UPoly u = den * Rational(2);
  const Quad base = ring.lift(xn);
  const int first = opt.swap_preimages ? -1 : 1;
  const Complex s{ring.add(base, ring.scale(ring.root(), first)), Quad{}};
  const Complex t{ring.add(base, ring.scale(ring.root(), -first)), Quad{}};
  const HomogeneousEvaluator at_s(ring, s, u, curve.degree());
  const HomogeneousEvaluator at_t(ring, t, u, curve.degree());
  std::array<std::array<Quad, 4>, 4> m;
  for (int r = 0; r < 4; ++r) {
    const Jet js = at_s(curve.coord(r));
    const Jet jt = at_t(curve.coord(r));
    m[r] = {opt.reverse_tangents ? ring.neg(js.derivative.re) : js.derivative.re, jt.value.re,
            opt.reverse_tangents ? ring.neg(jt.derivative.re) : jt.derivative.re, js.value.re};
  }
  const Quad det = laplace_det<Quad>(
      m, [&](const Quad& a, const Quad& b) { return ring.mul(a, b); },
      [&](const Quad& a, const Quad& b) { return ring.sub(a, b); }, [&](const Quad& a, const Quad& b) { return ring.add(a, b); });
  return ring.sign(det);
}

int inter_component_crossing(const RationalSpaceCurve& p, const RationalSpaceCurve& q, const AlgebraicPoint& pt,
                             const CrossingOptions& opt) {
  // Columns: P'(s), Q(t), Q'(t), P(s) with x = s, y = t.
  std::array<std::array<BPoly, 4>, 4> m;
  for (int r = 0; r < 4; ++r) {
    BPoly ps = BPoly::in_x(p.coord(r));
    BPoly dps = BPoly::in_x(p.coord(r).derivative());
    BPoly qt = BPoly::in_y(q.coord(r));
    BPoly dqt = BPoly::in_y(q.coord(r).derivative());
    if (opt.reverse_tangents) {
      dps = -dps;
      dqt = -dqt;
    }
    m[r] = opt.swap_preimages ? std::array<BPoly, 4>{dqt, ps, dps, qt} : std::array<BPoly, 4>{dps, qt, dqt, ps};
  }
  const BPoly det = laplace_det<BPoly>(
      m, [](const BPoly& a, const BPoly& b) { return a * b; }, [](const BPoly& a, const BPoly& b) { return a - b; },
      [](const BPoly& a, const BPoly& b) { return a + b; });
  return certified_sign(det, pt);
}

}  // namespace

int crossing_sign(const Link& normalized, const DoublePointLocus& locus, const CrossingOptions& options) {
  int s = 0;
  if (locus.kind == LocusKind::Crossing) {
    s = same_component_crossing(normalized.components.at(locus.i), locus.point, options);
  } else if (locus.kind == LocusKind::InterComponentCrossing) {
    s = inter_component_crossing(normalized.components.at(locus.i), normalized.components.at(locus.j), locus.point, options);
    s *= normalized.orientation(locus.i) * normalized.orientation(locus.j);
  } else {
    throw Error(ErrorKind::InvalidInput, "crossing_sign needs a crossing locus");
  }
  if (s == 0) throw Error(ErrorKind::ZeroDeterminant, "crossing frame is degenerate");
  return s;
}

int solitary_sign(const Link& normalized, const DoublePointLocus& locus, Branch branch) {
  if (locus.kind != LocusKind::Solitary) throw Error(ErrorKind::InvalidInput, "solitary_sign needs a solitary locus");
  const RationalSpaceCurve& curve = normalized.components.at(locus.i);
  const AlgebraicPoint& pt = locus.point;
  const UPoly& xn = pt.numerators()[0];
  const UPoly& yn = pt.numerators()[1];
  const UPoly& den = pt.denominator();
  // t = (xn +- i r) / (2 den), r^2 = 4 yn den - xn^2.
  QuadRing ring(pt.theta(), UPoly::constant(4) * yn * den - xn * xn);
  const UPoly u = den * Rational(2);

  auto evaluate_branch = [&](int eps) {
    const Complex t{ring.lift(xn), ring.scale(ring.root(), eps)};
    const HomogeneousEvaluator at(ring, t, u, curve.degree());
    const Jet x = at(curve.coord(kX));
    const Jet y = at(curve.coord(kY));
    const Jet z = at(curve.coord(kZ));
    const Jet w = at(curve.coord(kW));
    // Affine chart l = W + aX + bY; the map W -> l fixes the center and
    // has determinant 1.
    static constexpr std::array<std::array<int, 2>, 5> charts{{{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    for (const auto& [ca, cb] : charts) {
      const Complex lv = ring.add(ring.add(w.value, ring.scale(x.value, ca)), ring.scale(y.value, cb));
      if (ring.is_zero(lv)) continue;
      const Complex ld = ring.add(ring.add(w.derivative, ring.scale(x.derivative, ca)), ring.scale(y.derivative, cb));
      const Complex n1 = ring.sub(ring.mul(x.derivative, lv), ring.mul(x.value, ld));
      const Complex n2 = ring.sub(ring.mul(y.derivative, lv), ring.mul(y.value, ld));
      const int sigma = ring.sign(ring.sub(ring.mul(n1.re, n2.im), ring.mul(n1.im, n2.re)));
      const int fiber = ring.sign(ring.sub(ring.mul(z.value.im, lv.re), ring.mul(z.value.re, lv.im)));
      if (sigma == 0 || fiber == 0) throw Error(ErrorKind::ZeroDeterminant, "solitary frame is degenerate");
      return std::pair<int, int>{sigma, fiber};
    }
    throw Error(ErrorKind::ZeroDeterminant, "no affine chart contains the preimage");
  };

  switch (branch) {
    case Branch::Plus: {
      const auto [sigma, fiber] = evaluate_branch(1);
      return sigma * fiber;
    }
    case Branch::Minus: {
      const auto [sigma, fiber] = evaluate_branch(-1);
      return sigma * fiber;
    }
    case Branch::Auto:
      break;
  }
  const auto [sigma, fiber] = evaluate_branch(1);
  if (fiber > 0) return sigma;
  return evaluate_branch(-1).first;
}

int upper_preimage(const Link& normalized, const DoublePointLocus& locus) {
  const RationalSpaceCurve& p = normalized.components.at(locus.i);
  const RationalSpaceCurve& q = normalized.components.at(locus.j);
  if (locus.kind == LocusKind::InterComponentCrossing) {
    const BPoly ws = BPoly::in_x(p.coord(kW));
    const BPoly wt = BPoly::in_y(q.coord(kW));
    if (certified_sign(ws, locus.point) == 0 || certified_sign(wt, locus.point) == 0) return 0;
    const BPoly diff = BPoly::in_x(p.coord(kZ)) * wt - BPoly::in_y(q.coord(kZ)) * ws;
    return certified_sign(diff * ws * wt, locus.point);
  }
  if (locus.kind != LocusKind::Crossing) throw Error(ErrorKind::InvalidInput, "upper_preimage needs a crossing locus");
  const AlgebraicPoint& pt = locus.point;
  const UPoly& xn = pt.numerators()[0];
  QuadRing ring(pt.theta(), xn * xn - UPoly::constant(4) * pt.numerators()[1] * pt.denominator());
  const UPoly u = pt.denominator() * Rational(2);
  const HomogeneousEvaluator at_s(ring, {ring.add(ring.lift(xn), ring.root()), Quad{}}, u, p.degree());
  const HomogeneousEvaluator at_t(ring, {ring.sub(ring.lift(xn), ring.root()), Quad{}}, u, p.degree());
  const Quad zs = at_s(p.coord(kZ)).value.re;
  const Quad ws = at_s(p.coord(kW)).value.re;
  const Quad zt = at_t(p.coord(kZ)).value.re;
  const Quad wt = at_t(p.coord(kW)).value.re;
  if (ring.sign(ws) == 0 || ring.sign(wt) == 0) return 0;
  const Quad diff = ring.sub(ring.mul(zs, wt), ring.mul(zt, ws));
  // (xn + r) / (2 den) is the larger preimage only when den > 0.
  return pt.denominator_sign() * ring.sign(ring.mul(diff, ring.mul(ws, wt)));
}

int Diagram::count(LocusKind kind) const {
  return static_cast<int>(std::count_if(loci.begin(), loci.end(), [kind](const SignedLocus& l) { return l.locus.kind == kind; }));
}

Diagram build_diagram(const Projection& projection) {
  Diagram d;
  d.center = projection.center;
  d.transform = projection.transform;
  d.link = projection.link;
  d.certificate = projection.certificate;
  d.complex_double_points = projection.complex_double_points();
  auto loci = classify_double_points(projection);
  std::stable_sort(loci.begin(), loci.end(), [](const DoublePointLocus& a, const DoublePointLocus& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  for (auto& l : loci) {
    const int s = l.kind == LocusKind::Solitary ? solitary_sign(d.link, l) : crossing_sign(d.link, l);
    d.loci.push_back({std::move(l), s});
  }
  return d;
}

Diagram build_diagram(const Link& link, const Vec4<Rational>& center) { return build_diagram(project(link, center)); }

int writhe_unoriented(const Diagram& diagram) {
  int w = 0;
  for (const auto& l : diagram.loci) {
    if (l.locus.kind != LocusKind::InterComponentCrossing) w += l.sign;
  }
  return w;
}

int writhe_oriented(const Diagram& diagram) {
  if (!diagram.oriented()) throw Error(ErrorKind::MissingOrientation, "oriented writhe needs orientation flags");
  int w = 0;
  for (const auto& l : diagram.loci) w += l.sign;
  return w;
}

std::vector<std::vector<Rational>> linking_matrix(const Diagram& diagram) {
  if (!diagram.oriented()) throw Error(ErrorKind::MissingOrientation, "linking numbers need orientation flags");
  const std::size_t n = diagram.component_count();
  std::vector<std::vector<Rational>> lk(n, std::vector<Rational>(n));
  for (const auto& l : diagram.loci) {
    if (l.locus.kind != LocusKind::InterComponentCrossing) continue;
    lk[l.locus.i][l.locus.j] += Rational(l.sign, 2);
    lk[l.locus.j][l.locus.i] += Rational(l.sign, 2);
  }
  return lk;
}

WritheReport writhe_report(const Diagram& diagram) {
  WritheReport r;
  r.unoriented = writhe_unoriented(diagram);
  if (diagram.oriented()) {
    r.oriented = writhe_oriented(diagram);
    r.linking = linking_matrix(diagram);
  }
  r.crossings = diagram.count(LocusKind::Crossing);
  r.solitary = diagram.count(LocusKind::Solitary);
  r.inter_crossings = diagram.count(LocusKind::InterComponentCrossing);
  return r;
}

}  // namespace ewrithe
