#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ewrithe/curve.h"
#include "ewrithe/error.h"

using namespace ewrithe;

namespace {

RationalSpaceCurve model(const Rational& tau) {
  // x = -t^2 - tau, y = -t (t^2 + tau), z = -t
  return RationalSpaceCurve({UPoly{-tau, 0, -1}, UPoly{0, -tau, 0, -1}, UPoly{0, -1}, UPoly{1}});
}

RationalSpaceCurve unit_circle() { return RationalSpaceCurve({UPoly{1, 0, -1}, UPoly{0, 2}, UPoly{}, UPoly{1, 0, 1}}); }

ErrorKind kind_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("model curve values and tangents") {
  const auto minus = model(-1);
  CHECK(minus.degree() == 3);
  CHECK(evaluate(minus, Rational(-1)) == Vec4<Rational>{0, 0, 1, 1});
  CHECK(affine_tangent(minus, Rational(-1)) == std::array<Rational, 3>{2, -2, -1});

  const auto plus = model(1);
  const GaussianRational minus_i{0, -1};
  const auto p = evaluate(plus, minus_i);
  CHECK(p[0] == GaussianRational{0, 0});
  CHECK(p[1] == GaussianRational{0, 0});
  CHECK(p[2] == GaussianRational{0, 1});
  CHECK(p[3] == GaussianRational{1, 0});
  const auto d = affine_tangent(plus, minus_i);
  CHECK(d[0] == GaussianRational{0, 2});
  CHECK(d[1] == GaussianRational{2, 0});
  CHECK(d[2] == GaussianRational{-1, 0});
}

TEST_CASE("evaluation at infinity and tangent") {
  const auto c = model(-1);
  CHECK(evaluate_at_infinity(c) == Vec4<Rational>{0, -1, 0, 0});
  CHECK(tangent(c, Rational(2)) == Vec4<Rational>{-4, -11, -1, 0});
  CHECK(c.coefficient(1) == Vec4<Rational>{0, 1, -1, 0});
}

TEST_CASE("Moebius reparametrizations") {
  const auto c = model(-1);
  SUBCASE("translation") {
    const MoebiusReparam m(1, 1, 0, 1);
    const auto r = reparametrize(c, m);
    for (int s = -3; s <= 3; ++s) CHECK(evaluate(r, Rational(s)) == evaluate(c, Rational(s + 1)));
  }
  SUBCASE("inversion reverses coefficients") {
    const auto r = reparametrize(c, MoebiusReparam(0, 1, 1, 0));
    for (int i = 0; i < 4; ++i) {
      std::vector<Rational> padded(4, 0);
      for (int k = 0; k <= c.coord(i).degree(); ++k) padded[static_cast<std::size_t>(k)] = c.coord(i).coeff(k);
      std::reverse(padded.begin(), padded.end());
      CHECK(r.coord(i) == UPoly(padded));
    }
  }
  CHECK(MoebiusReparam(-1, 0, 0, 1).determinant() < 0);
  CHECK(MoebiusReparam(2, 3, 1, 1)(Rational(1)) == ratio(5, 2));
  CHECK(kind_of([] { MoebiusReparam(1, 2, 2, 4); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("projective transforms") {
  RationalMatrix m{{2, 1, 0, 0}, {0, 1, 0, 3}, {1, 0, -1, 0}, {0, 0, 1, 1}};
  const ProjectiveTransform t(m);
  const auto c = model(ratio(-1, 3));
  CHECK(apply_transform(apply_transform(c, t), t.inverse()) == c);
  CHECK((t * t.inverse()).matrix() == ProjectiveTransform::identity().matrix());
  // First-row cofactors: 2 * det[[1,0,3],[0,-1,0],[0,1,1]] - det[[0,0,3],[1,-1,0],[0,1,1]].
  CHECK(t.determinant() == 2 * (-1) - 1 * 3);
  CHECK(t.orientation() == -1);
  CHECK(apply_transform(Link(c), t).orientation == -1);
  RationalMatrix singular{{1, 2, 0, 0}, {2, 4, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(kind_of([&] { ProjectiveTransform{singular}; }) == ErrorKind::SingularMatrix);
  CHECK(ProjectiveTransform::diagonal({1, 1, -1, 1}).orientation() == -1);
}

TEST_CASE("curve validation") {
  for (const Rational tau : {Rational(-2), Rational(-1), ratio(-1, 2), ratio(1, 2), Rational(1), Rational(2)}) {
    CAPTURE(to_string(tau));
    CHECK(validate(model(tau)).valid());
  }
  // tau = 0 is the twisted cubic (-t^2, -t^3, -t): smooth in space.
  CHECK(inspect(model(0)).valid());

  const RationalSpaceCurve cusp({UPoly{0, 0, 1}, UPoly{0, 0, 0, 1}, UPoly{}, UPoly{1}});
  CHECK(kind_of([&] { validate(cusp); }) == ErrorKind::CuspDetected);
  const RationalSpaceCurve node({UPoly{-1, 0, 1}, UPoly{0, -1, 0, 1}, UPoly{}, UPoly{1}});
  CHECK(kind_of([&] { validate(node); }) == ErrorKind::RealSingularityDetected);
  const RationalSpaceCurve reducible({UPoly{0, -1, 1}, UPoly{0, 1, 1}, UPoly{0, 0, 1}, UPoly{0, 1}});
  CHECK(kind_of([&] { validate(reducible); }) == ErrorKind::ReducibleParametrization);
  // P(i) = P(-i) = (0 : 0 : 0 : 1) is an isolated real point of the curve.
  const RationalSpaceCurve acnode({UPoly{1, 0, 1}, UPoly{0, 1, 0, 1}, UPoly{}, UPoly{1}});
  CHECK(kind_of([&] { validate(acnode); }) == ErrorKind::RealSingularityDetected);
  CHECK(inspect(model(-1)).imaginary_singular_pairs == 0);
  CHECK(kind_of([] { RationalSpaceCurve({UPoly{}, UPoly{}, UPoly{}, UPoly{}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("link validation") {
  const RationalSpaceCurve linked({UPoly{2}, UPoly{}, UPoly{0, 2}, UPoly{1, 0, 1}});
  CHECK_NOTHROW(validate(Link({unit_circle(), linked}, std::vector<int>{1, -1})));
  // Coplanar circles share only the imaginary circular points.
  const RationalSpaceCurve apart({UPoly{6, 0, 4}, UPoly{0, 2}, UPoly{}, UPoly{1, 0, 1}});
  CHECK_NOTHROW(validate(Link({unit_circle(), apart})));
  // Circle of radius 1 about (2, 0, 0) in the xz-plane passes through (1, 0, 0).
  const RationalSpaceCurve touching({UPoly{3, 0, 1}, UPoly{}, UPoly{0, 2}, UPoly{1, 0, 1}});
  CHECK(kind_of([&] { validate(Link({unit_circle(), touching})); }) == ErrorKind::ComponentsIntersect);
  CHECK(kind_of([&] { Link({unit_circle(), linked}, std::vector<int>{1}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { Link({unit_circle()}, std::vector<int>{2}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("random curves") {
  for (int d = 1; d <= 5; ++d) {
    const auto a = sample_random_curve(d, 7);
    CHECK(a.degree() == d);
    CHECK(a == sample_random_curve(d, 7));
    CHECK(validate(a).valid());
    for (const auto& c : a.coords()) {
      for (const auto& x : c.coeffs()) CHECK(abs(x) <= 5);
    }
  }
  CHECK_FALSE(sample_random_curve(4, 1) == sample_random_curve(4, 2));
}

TEST_CASE("symmetric minor") {
  // (a(s) b(t) - a(t) b(s)) / (s - t) for a = t^2, b = 1 is s + t = e.
  const BPoly m = symmetric_minor(UPoly{0, 0, 1}, UPoly{1});
  CHECK(m(Rational(3), Rational(5)) == 3);
  // For a = t^3, b = t: s t (s + t) = f e.
  const BPoly n = symmetric_minor(UPoly{0, 0, 0, 1}, UPoly{0, 1});
  CHECK(n(Rational(2), Rational(7)) == 14);
}
