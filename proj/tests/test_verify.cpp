#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ewrithe/io.h"
#include "ewrithe/verify.h"

using namespace ewrithe;

namespace {

std::string data(const char* name) { return std::string(EWRITHE_DATA_DIR) + "/" + name; }

std::vector<int> values(const VerificationRun& run) {
  std::vector<int> out;
  for (const auto& r : run.records) out.push_back(r.value);
  return out;
}

}  // namespace

TEST_CASE("random transforms") {
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    const int o = k % 2 == 0 ? 1 : -1;
    const auto t = random_transform(rng, o);
    CHECK(t.orientation() == o);
    for (const auto& row : t.matrix()) {
      for (const auto& x : row) CHECK(abs(x) <= 5);
    }
  }
}

TEST_CASE("center independence and isotopy on the model") {
  const Link link = load_link(data("model_tau_minus1.jsonl"));
  const auto centers = verify_center_independence(link, 10, 3);
  CHECK(centers.passed);
  CHECK(centers.records.size() == 10);
  CHECK(centers.reference == -1);
  const auto iso = verify_isotopy_invariance(link, 6, 3);
  CHECK(iso.passed);
  CHECK(iso.records.size() == 12);
  CHECK(iso.attained == std::set<int>{-1, 1});
  for (std::size_t k = 0; k < iso.records.size(); ++k) CHECK(iso.records[k].expected == (k < 6 ? -1 : 1));
}

TEST_CASE("runs are reproducible from the seed") {
  const Link link(sample_random_curve(4, 21));
  const auto a = verify_center_independence(link, 5, 9);
  const auto b = verify_center_independence(link, 5, 9);
  CHECK(values(a) == values(b));
  std::vector<std::string> sa;
  std::vector<std::string> sb;
  for (const auto& r : a.records) sa.push_back(r.subject);
  for (const auto& r : b.records) sb.push_back(r.subject);
  CHECK(sa == sb);
  CHECK(verification_json({a}) == verification_json({b}));
}

TEST_CASE("parity and bound on small samples") {
  for (int d : {3, 4}) {
    const auto run = verify_parity_bounds(d, 6, 2);
    CHECK(run.passed);
    const int bound = (d - 1) * (d - 2) / 2;
    for (int w : run.attained) {
      CHECK(std::abs(w) <= bound);
      CHECK((w - bound) % 2 == 0);
    }
  }
}

TEST_CASE("model family scan") {
  const CurveFile file = parse_curve_file(data("model_family.jsonl"));
  REQUIRE(file.is_family());
  const auto scan = scan_family(*file.family, file.family->grid, 0);
  REQUIRE(scan.size() == 7);
  for (const auto& m : scan) {
    REQUIRE(m.writhe.has_value());
    CHECK(*m.writhe == -1);
  }
  for (const auto& j : family_jumps(scan)) CHECK(j.delta == 0);
}

TEST_CASE("constant family") {
  CurveFile file = parse_curve_text(
      "{\"parameter\": \"tau\"}\n{\"x\": [1, 0, -1], \"y\": [0, 1, 0, -1], \"z\": [0, -1], \"w\": [1]}\n", "inline");
  const auto scan = scan_family(*file.family, {Rational(-1), Rational(0), Rational(3)}, 1);
  for (const auto& m : scan) CHECK(m.writhe == -1);
  for (const auto& j : family_jumps(scan)) CHECK(j.delta == 0);
}

TEST_CASE("crossing change family") {
  const CurveFile file = parse_curve_file(data("crossing_change_family.jsonl"));
  const auto scan = scan_family(*file.family, file.family->grid, 0);
  const auto jumps = family_jumps(scan);
  int across = 0;
  for (const auto& j : jumps) {
    if (j.across_singular) {
      ++across;
      CHECK(std::abs(j.delta) == 2);
    } else {
      CHECK(j.delta == 0);
    }
  }
  CHECK(across == 1);
}
