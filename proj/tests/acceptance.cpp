#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ewrithe/error.h"
#include "ewrithe/io.h"
#include "ewrithe/verify.h"

using namespace ewrithe;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string data(const char* name) { return std::string(EWRITHE_DATA_DIR) + "/" + name; }

RationalSpaceCurve model(const Rational& tau) {
  return RationalSpaceCurve({UPoly{-tau, 0, -1}, UPoly{0, -tau, 0, -1}, UPoly{0, -1}, UPoly{1}});
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string set_text(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? ", " : "") + std::to_string(v);
  return out + "}";
}

const std::vector<Rational>& first_move_grid() {
  static const std::vector<Rational> grid{Rational(-2), Rational(-1), ratio(-1, 2), ratio(1, 2), Rational(1), Rational(2)};
  return grid;
}

std::vector<Link> random_curves(int degree, int count, std::uint64_t seed) {
  std::vector<Link> out;
  for (int k = 0; k < count; ++k) out.emplace_back(sample_random_curve(degree, derive_seed(seed, static_cast<std::uint64_t>(k))));
  return out;
}

std::vector<Link> two_component_links() {
  std::vector<Link> out;
  for (const char* name : {"hopf.jsonl", "hopf_reversed.jsonl", "tilted_hopf.jsonl", "circle_and_axis.jsonl",
                           "unlinked_circles.jsonl", "cubic_and_circle.jsonl"}) {
    out.push_back(load_link(data(name)));
  }
  return out;
}

Diagram generic_diagram(const Link& link, std::uint64_t seed) {
  try {
    return build_diagram(link, canonical_center());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonGenericProjection && e.kind() != ErrorKind::TangentialPair &&
        e.kind() != ErrorKind::CenterOnSingularLine && e.kind() != ErrorKind::CenterOnCurve) {
      throw;
    }
  }
  return build_diagram(sample_generic_projection(link, seed));
}

Outcome golden_signs() {
  Outcome o;
  std::ostringstream d;
  for (const auto& [tau, kind] : {std::pair{Rational(-1), LocusKind::Crossing}, std::pair{Rational(1), LocusKind::Solitary}}) {
    const auto start = std::chrono::steady_clock::now();
    const Diagram diagram = build_diagram(Link(model(tau)), canonical_center());
    const double t = seconds_since(start);
    const bool ok = diagram.loci.size() == 1 && diagram.loci[0].locus.kind == kind && diagram.loci[0].sign == -1 && t < 1.0;
    o.pass = o.pass && ok;
    d << "tau=" << to_string(tau) << ": " << writhe_summary(diagram) << " (" << t << " s); ";
  }
  o.detail = d.str();
  return o;
}

Outcome first_move() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream d;
  for (const auto& tau : first_move_grid()) {
    const Link link(model(tau));
    const int canonical = writhe_unoriented(build_diagram(link, canonical_center()));
    const int sampled = sampled_writhe(link, 0);
    o.pass = o.pass && canonical == -1 && sampled == -1;
    d << to_string(tau) << ":" << canonical << " ";
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t < 10.0;
  d << "(" << t << " s)";
  o.detail = d.str();
  return o;
}

Outcome center_independence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream d;
  int curves = 0;
  for (int degree = 3; degree <= 5; ++degree) {
    for (const auto& link : random_curves(degree, 2, 300 + static_cast<std::uint64_t>(degree))) {
      const auto run = verify_center_independence(link, 20, 17);
      o.pass = o.pass && run.passed && run.records.size() == 20;
      d << "d" << degree << ":" << (run.reference ? std::to_string(*run.reference) : "?") << " ";
      ++curves;
    }
  }
  const double t = seconds_since(start);
  o.pass = o.pass && curves >= 5 && t < 300;
  d << "(" << curves << " curves x 20 centers, " << t << " s)";
  o.detail = d.str();
  return o;
}

Outcome isotopy_invariance() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream d;
  std::vector<Link> subjects{Link(model(-1)), Link(model(1))};
  for (int degree = 3; degree <= 5; ++degree) subjects.push_back(random_curves(degree, 1, 500)[0]);
  for (const auto& link : subjects) {
    const auto run = verify_isotopy_invariance(link, 20, 23);
    int preserving = 0;
    int reversing = 0;
    for (std::size_t k = 0; k < run.records.size(); ++k) (k < 20 ? preserving : reversing) += run.records[k].ok;
    o.pass = o.pass && run.passed && preserving == 20 && reversing == 20;
    d << (run.reference ? std::to_string(*run.reference) : "?") << "->" << set_text(run.attained) << " ";
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t < 300;
  d << "(" << subjects.size() << " curves, " << t << " s)";
  o.detail = d.str();
  return o;
}

Outcome double_point_counts() {
  Outcome o;
  std::ostringstream d;
  for (int degree = 3; degree <= 5; ++degree) {
    std::set<int> seen;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Link link(sample_random_curve(degree, derive_seed(700, seed)));
      seen.insert(sample_generic_projection(link, seed).complex_double_points());
    }
    o.pass = o.pass && seen == std::set<int>{(degree - 1) * (degree - 2) / 2};
    d << "d=" << degree << ": " << set_text(seen) << " ";
  }
  o.detail = d.str();
  return o;
}

Outcome parity_bounds() {
  Outcome o;
  std::ostringstream d;
  for (const auto& [degree, allowed] : {std::pair{4, std::set<int>{-3, -1, 1, 3}}, std::pair{3, std::set<int>{-1, 1}}}) {
    const auto run = verify_parity_bounds(degree, 50, 41);
    bool inside = run.records.size() == 50;
    for (const auto& r : run.records) inside = inside && allowed.count(r.value) == 1;
    o.pass = o.pass && run.passed && inside;
    d << "d=" << degree << " attained " << set_text(run.attained) << "; ";
  }
  o.detail = d.str();
  return o;
}

Outcome oriented_relation() {
  Outcome o;
  std::ostringstream d;
  int links = 0;
  for (const auto& link : two_component_links()) {
    const Diagram diagram = generic_diagram(link, 3);
    const auto lk = linking_matrix(diagram);
    Rational sum = 0;
    bool integral = true;
    for (std::size_t i = 0; i < lk.size(); ++i) {
      for (std::size_t j = i + 1; j < lk.size(); ++j) {
        sum += lk[i][j];
        integral = integral && lk[i][j].get_den() == 1;
      }
    }
    const int oriented = writhe_oriented(diagram);
    const int unoriented = writhe_unoriented(diagram);
    std::vector<int> flipped_flags;
    for (int f : *link.orientations) flipped_flags.push_back(-f);
    const Diagram flipped = build_diagram(Link(link.components, flipped_flags), diagram.center);
    const bool flip_ok = writhe_oriented(flipped) == oriented && writhe_unoriented(flipped) == unoriented &&
                         linking_matrix(flipped) == lk;
    o.pass = o.pass && integral && Rational(oriented - unoriented) == 2 * sum && flip_ok;
    d << "lk=" << to_string(sum) << " ";
    ++links;
  }
  o.pass = o.pass && links >= 5;
  d << "(" << links << " links)";
  o.detail = d.str();
  return o;
}

// Self-crossing and solitary signs, in locus order.
std::vector<int> self_signs(const Diagram& d) {
  std::vector<int> out;
  for (const auto& l : d.loci) {
    if (l.locus.kind != LocusKind::InterComponentCrossing) out.push_back(l.sign);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome choice_independence() {
  Outcome o;
  std::vector<Link> corpus;
  for (const auto& tau : first_move_grid()) corpus.emplace_back(model(tau));
  for (const char* name : {"model_tau_minus1.jsonl", "model_tau_plus1.jsonl", "conic.jsonl"}) corpus.push_back(load_link(data(name)));
  for (int degree = 3; degree <= 5; ++degree) {
    for (auto& l : random_curves(degree, 4, 900 + static_cast<std::uint64_t>(degree))) corpus.push_back(std::move(l));
  }
  const CurveFile family = parse_curve_file(data("crossing_change_family.jsonl"));
  for (const auto& v : family.family->grid) {
    if (v != 0) corpus.push_back(family.family->member(v));
  }
  for (auto& l : two_component_links()) corpus.push_back(std::move(l));

  int loci = 0;
  int solitary = 0;
  int reparametrized = 0;
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const Link& link = corpus[n];
    const Diagram d = generic_diagram(link, n);
    for (const auto& l : d.loci) {
      ++loci;
      if (l.locus.kind == LocusKind::Solitary) {
        ++solitary;
        o.pass = o.pass && solitary_sign(d.link, l.locus, Branch::Plus) == l.sign &&
                 solitary_sign(d.link, l.locus, Branch::Minus) == l.sign;
        continue;
      }
      o.pass = o.pass && crossing_sign(d.link, l.locus, {true, false}) == l.sign;
      if (l.locus.kind == LocusKind::Crossing) {
        o.pass = o.pass && crossing_sign(d.link, l.locus, {false, true}) == l.sign &&
                 crossing_sign(d.link, l.locus, {true, true}) == l.sign;
      }
    }
    // Reverse each component in turn by t -> -t and project from the same center.
    for (std::size_t c = 0; c < link.components.size(); ++c) {
      Link reversed = link;
      reversed.components[c] = reparametrize(link.components[c], MoebiusReparam(-1, 0, 0, 1));
      try {
        const Diagram r = build_diagram(reversed, d.center);
        o.pass = o.pass && self_signs(r) == self_signs(d);
        ++reparametrized;
      } catch (const Error&) {
        // t -> -t can move a double point to t = oo; the flag check above still covers this link.
      }
    }
  }
  o.pass = o.pass && loci > 0 && solitary > 0;
  o.detail = std::to_string(corpus.size()) + " links, " + std::to_string(loci) + " loci (" + std::to_string(solitary) +
             " solitary), " + std::to_string(reparametrized) + " reversed components";
  return o;
}

Outcome wall_crossing() {
  Outcome o;
  std::ostringstream d;
  const CurveFile quartic = parse_curve_file(data("crossing_change_family.jsonl"));
  const auto scan = scan_family(*quartic.family, quartic.family->grid, 0);
  int across = 0;
  for (const auto& j : family_jumps(scan)) {
    if (j.across_singular) {
      ++across;
      o.pass = o.pass && std::abs(j.delta) == 2;
      d << "quartic jump " << j.delta << " between " << to_string(j.from) << " and " << to_string(j.to) << "; ";
    } else {
      o.pass = o.pass && j.delta == 0;
    }
  }
  o.pass = o.pass && across == 1;

  const CurveFile first = parse_curve_file(data("model_family.jsonl"));
  const auto model_scan = scan_family(*first.family, first.family->grid, 0);
  std::optional<int> below;
  std::optional<int> above;
  for (const auto& m : model_scan) {
    o.pass = o.pass && m.writhe.has_value();
    if (m.value < 0 && m.writhe) below = m.writhe;
    if (m.value > 0 && m.writhe && !above) above = m.writhe;
  }
  for (const auto& j : family_jumps(model_scan)) o.pass = o.pass && j.delta == 0;
  o.pass = o.pass && below && above && *below == *above;
  d << "model jump across 0: " << (below && above ? std::to_string(*above - *below) : "?");
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"golden signs of the first-move model", golden_signs},
      {"first-move invariance", first_move},
      {"projection independence", center_independence},
      {"rigid-isotopy invariance and mirror antisymmetry", isotopy_invariance},
      {"double-point count", double_point_counts},
      {"parity and bound", parity_bounds},
      {"oriented/unoriented relation", oriented_relation},
      {"choice independence", choice_independence},
      {"wall crossing", wall_crossing},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
