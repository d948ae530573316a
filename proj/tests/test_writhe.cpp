#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ewrithe/error.h"
#include "ewrithe/writhe.h"

using namespace ewrithe;

namespace {

RationalSpaceCurve model(const Rational& tau) {
  return RationalSpaceCurve({UPoly{-tau, 0, -1}, UPoly{0, -tau, 0, -1}, UPoly{0, -1}, UPoly{1}});
}

RationalSpaceCurve circle() { return RationalSpaceCurve({UPoly{1, 0, -1}, UPoly{0, 2}, UPoly{}, UPoly{1, 0, 1}}); }

// Unit circle about (1, 0, 0) in the xz-plane; it links circle() once.
RationalSpaceCurve ring() { return RationalSpaceCurve({UPoly{2}, UPoly{}, UPoly{0, 2}, UPoly{1, 0, 1}}); }

}  // namespace

TEST_CASE("golden local signs of the first move") {
  const Diagram minus = build_diagram(Link(model(-1)), canonical_center());
  REQUIRE(minus.loci.size() == 1);
  CHECK(minus.loci[0].locus.kind == LocusKind::Crossing);
  CHECK(minus.loci[0].sign == -1);
  CHECK(writhe_unoriented(minus) == -1);

  const Diagram plus = build_diagram(Link(model(1)), canonical_center());
  REQUIRE(plus.loci.size() == 1);
  CHECK(plus.loci[0].locus.kind == LocusKind::Solitary);
  CHECK(plus.loci[0].sign == -1);
  CHECK(writhe_unoriented(plus) == -1);
}

TEST_CASE("sign choices do not matter") {
  for (const Rational tau : {Rational(-2), Rational(-1), ratio(-1, 2)}) {
    const Diagram d = build_diagram(Link(model(tau)), canonical_center());
    const auto& l = d.loci.at(0);
    CHECK(crossing_sign(d.link, l.locus, {true, false}) == l.sign);
    CHECK(crossing_sign(d.link, l.locus, {false, true}) == l.sign);
    CHECK(crossing_sign(d.link, l.locus, {true, true}) == l.sign);
  }
  for (const Rational tau : {Rational(2), Rational(1), ratio(1, 2)}) {
    const Diagram d = build_diagram(Link(model(tau)), canonical_center());
    const auto& l = d.loci.at(0);
    CHECK(solitary_sign(d.link, l.locus, Branch::Plus) == l.sign);
    CHECK(solitary_sign(d.link, l.locus, Branch::Minus) == l.sign);
  }
}

TEST_CASE("mirror image negates the writhe") {
  const auto mirror = ProjectiveTransform::diagonal({1, 1, -1, 1});
  for (const Rational tau : {Rational(-1), Rational(1)}) {
    const auto m = apply_transform(Link(model(tau)), mirror);
    CHECK(m.orientation == -1);
    CHECK(writhe_unoriented(build_diagram(m.link, canonical_center())) == 1);
  }
}

TEST_CASE("the preimage nearer the center is above") {
  // Preimages t = +-1 have z = -+1; the center is at z = +infinity.
  const Diagram d = build_diagram(Link(model(-1)), canonical_center());
  // First preimage (e + sqrt(e^2 - 4f)) / 2 = 1 has z = -1.
  CHECK(upper_preimage(d.link, d.loci[0].locus) == -1);
}

TEST_CASE("plane curves have no crossings") {
  const Diagram d = build_diagram(Link(circle()), canonical_center());
  CHECK(d.loci.empty());
  CHECK(writhe_unoriented(d) == 0);
  CHECK(d.complex_double_points == 0);
}

TEST_CASE("Hopf link") {
  const Link hopf({circle(), ring()}, std::vector<int>{1, 1});
  const Diagram d = build_diagram(sample_generic_projection(hopf, 0));
  CHECK(d.oriented());
  CHECK(writhe_unoriented(d) == 0);
  const auto lk = linking_matrix(d);
  CHECK(abs(lk[0][1]) == 1);
  CHECK(lk[0][1] == lk[1][0]);
  CHECK(lk[0][0] == 0);
  CHECK(writhe_oriented(d) - writhe_unoriented(d) == 2 * lk[0][1]);

  const Link reversed({circle(), ring()}, std::vector<int>{1, -1});
  const Diagram r = build_diagram(reversed, d.center);
  CHECK(linking_matrix(r)[0][1] == -lk[0][1]);
  const Link flipped({circle(), ring()}, std::vector<int>{-1, -1});
  CHECK(writhe_oriented(build_diagram(flipped, d.center)) == writhe_oriented(d));

  const auto report = writhe_report(d);
  CHECK(report.inter_crossings == d.count(LocusKind::InterComponentCrossing));
  CHECK(report.linking.has_value());
}

TEST_CASE("single components and separated circles") {
  const Link one({model(-1)}, std::vector<int>{-1});
  const Diagram d = build_diagram(one, canonical_center());
  CHECK(writhe_oriented(d) == writhe_unoriented(d));
  CHECK(linking_matrix(d) == std::vector<std::vector<Rational>>{{0}});
  const RationalSpaceCurve far({UPoly{6, 0, 4}, UPoly{0, 2}, UPoly{}, UPoly{1, 0, 1}});
  const Link apart({circle(), far}, std::vector<int>{1, 1});
  const Diagram a = build_diagram(sample_generic_projection(apart, 0));
  CHECK(linking_matrix(a)[0][1] == 0);
  CHECK(writhe_oriented(a) == 0);
}

TEST_CASE("orientation is required for the oriented writhe") {
  const Link plain({circle(), ring()});
  const Diagram d = build_diagram(sample_generic_projection(plain, 0));
  CHECK_THROWS_AS(writhe_oriented(d), Error);
  CHECK_THROWS_AS(linking_matrix(d), Error);
  CHECK_FALSE(writhe_report(d).oriented.has_value());
}

TEST_CASE("writhe of random curves does not depend on the center") {
  for (int d = 3; d <= 4; ++d) {
    const Link link(sample_random_curve(d, 11));
    const int w = writhe_unoriented(build_diagram(sample_generic_projection(link, 0)));
    for (std::uint64_t seed = 1; seed < 5; ++seed) {
      CHECK(writhe_unoriented(build_diagram(sample_generic_projection(link, seed))) == w);
    }
  }
}
