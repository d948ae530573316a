#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ewrithe/algebraic.h"
#include "ewrithe/error.h"
#include "ewrithe/resultant.h"

using namespace ewrithe;

namespace {

Rational q(const char* s) { return parse_rational(s); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(q("3") == 3);
  CHECK(q(" -7/14 ") == Rational(-1, 2));
  CHECK_THROWS_AS(q("1/0"), Error);
  CHECK_THROWS_AS(q("x"), Error);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("univariate arithmetic and gcd") {
  UPoly a{-1, 0, 1};    // t^2 - 1
  UPoly b{1, 1};        // t + 1
  auto [quot, rem] = divmod(a, b);
  CHECK(quot == UPoly{-1, 1});
  CHECK(rem.is_zero());
  CHECK(gcd(a, UPoly{-1, 1, 0, 0}) == UPoly{-1, 1});
  CHECK(coprime(UPoly{1, 0, 1}, UPoly{-2, 0, 1}));
  CHECK_FALSE(coprime(a, UPoly{1, 2, 1}));
  CHECK_THROWS_AS(exact_quotient(a, UPoly{2, 1}), Error);
}

TEST_CASE("square-free part") {
  // (t-1)^2 (t+2)^3 has square-free part (t-1)(t+2) = t^2 + t - 2.
  const std::vector<Rational> roots{1, 1, -2, -2, -2};
  const UPoly p = from_roots(roots);
  CHECK(squarefree_part(p) == UPoly{-2, 1, 1});
  CHECK_FALSE(is_squarefree(p));
  CHECK(is_squarefree(UPoly{-2, 1, 1}));
  CHECK_THROWS_AS(squarefree_part(UPoly{}), Error);
}

TEST_CASE("univariate resultant against hand-expanded Sylvester determinant") {
  // Res(t^2+1, t^2-2): Sylvester rows
  // [1 0 1 0; 0 1 0 1; 1 0 -2 0; 0 1 0 -2], determinant 9.
  const RationalMatrix sylvester{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, -2, 0}, {0, 1, 0, -2}};
  CHECK(determinant(sylvester) == 9);
  CHECK(resultant(UPoly{1, 0, 1}, UPoly{-2, 0, 1}) == 9);
  CHECK(resultant(UPoly{-2, 1}, UPoly{-5, 1}) == -3);
  const UPoly p{3, -1, 4, 1};
  CHECK(resultant(p, p) == 0);
  CHECK_THROWS_AS(resultant(UPoly{}, p), Error);
}

TEST_CASE("bivariate resultant specialises correctly") {
  // x^2 + y^2 - 1 and x - y: eliminating x gives 2y^2 - 1 up to sign.
  const BPoly circle = BPoly::x() * BPoly::x() + BPoly::y() * BPoly::y() - BPoly::constant(1);
  const BPoly line = BPoly::x() - BPoly::y();
  const UPoly r = resultant(circle, line, Var::X);
  for (int y = -3; y <= 3; ++y) {
    CHECK(r(y) == resultant(circle.at_y(y), line.at_y(y)));
  }
  CHECK(primitive_part(r) == UPoly{-1, 0, 2});
}

TEST_CASE("real root isolation") {
  const std::vector<Rational> roots{-1, 0, 1};
  auto iso = isolate_real_roots(from_roots(roots));
  REQUIRE(iso.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(iso[i].lo() <= roots[i]);
    CHECK(iso[i].hi() >= roots[i]);
  }
  CHECK(isolate_real_roots(UPoly{1, 0, 1}).empty());
  auto sqrt2 = isolate_real_roots(UPoly{-2, 0, 1});
  REQUIRE(sqrt2.size() == 2);
  CHECK(sqrt2[1].approx() == doctest::Approx(1.41421356237));
  CHECK_THROWS_AS(isolate_real_roots(UPoly{1, 2, 1}), Error);
  CHECK(SturmSequence(UPoly{-6, 11, -6, 1}).count_real_roots() == 3);
}

TEST_CASE("certified signs") {
  const AlgebraicNumber s(UPoly{-2, 0, 1}, 1, 2);
  CHECK(certified_sign(UPoly{-2, 0, 1}, s) == 0);
  CHECK(certified_sign(UPoly{Rational(-141421, 100000), 1}, s) == 1);
  CHECK(certified_sign(UPoly{Rational(-141422, 100000), 1}, s) == -1);
  // (t^2 - 2)(t - 5) vanishes at sqrt 2 even though it is not reduced.
  CHECK(certified_sign(UPoly{10, -2, -5, 1}, s) == 0);
  CHECK_THROWS_AS(AlgebraicNumber(UPoly{-2, 0, 1}, -2, 2), Error);

  // e^2 - 4f at (e, f) = (0, -1) and (0, 1).
  const BPoly disc = BPoly::x() * BPoly::x() - BPoly::constant(4) * BPoly::y();
  const std::vector<Rational> p1{0, -1};
  const std::vector<Rational> p2{0, 1};
  CHECK(certified_sign(disc, AlgebraicPoint::from_rationals(p1)) == 1);
  CHECK(certified_sign(disc, AlgebraicPoint::from_rationals(p2)) == -1);

  // Point (sqrt 2, 1/2): x^2 - 4y = 0.
  const std::vector<AlgebraicNumber> coords{s, AlgebraicNumber::rational(Rational(1, 2))};
  const AlgebraicPoint pt = AlgebraicPoint::from_numbers(coords);
  CHECK(vanishes_at(disc, pt));
  CHECK(certified_sign(BPoly::x() - BPoly::y(), pt) == 1);
  CHECK(pt.approx(0) == doctest::Approx(1.41421356237));
}

TEST_CASE("real root counts of products with known real roots") {
  // Known rational roots times quadratics without real roots; even
  // products make the remainder degree drop by two inside the chain.
  const std::vector<std::vector<Rational>> root_sets{
      {-1, 1}, {-3, 0, 3}, {ratio(-1, 2), ratio(1, 2)}, {-2, -1, 1, 2}, {5}, {}};
  const std::vector<UPoly> positive{UPoly{1}, UPoly{2, 0, 1}, UPoly{3, 0, 1}, UPoly{1, 1, 1}, UPoly{7, 0, 0, 0, 2}};
  for (const auto& roots : root_sets) {
    for (const auto& a : positive) {
      for (const auto& b : positive) {
        if (a == b && a.degree() > 0) continue;
        for (int s : {1, -1}) {
          const UPoly p = from_roots(roots) * a * b * Rational(s);
          if (!is_squarefree(p) || p.degree() < 1) continue;
          CAPTURE(to_string(p));
          CHECK(SturmSequence(p).count_real_roots() == static_cast<int>(roots.size()));
          CHECK(isolate_real_roots(p).size() == roots.size());
        }
      }
    }
  }
}

TEST_CASE("pseudo-remainder sign with skipped degrees") {
  // Oracle: sign changes on a grid over [-20, 20], which contains every
  // root by the Cauchy bound; the two roots are near +-3.4.
  const UPoly p{-9, 0, -25, 0, -21, 0, 2};
  int changes = 0;
  double last = -9;
  for (int k = -4000; k <= 4000; ++k) {
    const double w = k / 200.0;
    const double v = ((((2 * w * w - 21) * w * w) - 25) * w * w) - 9;
    if (k > -4000 && (v > 0) != (last > 0)) ++changes;
    last = v;
  }
  CHECK(changes == 2);
  CHECK(SturmSequence(p).count_real_roots() == 2);
}
