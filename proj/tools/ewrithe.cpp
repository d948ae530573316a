#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ewrithe/error.h"
#include "ewrithe/io.h"
#include "ewrithe/projection.h"
#include "ewrithe/random.h"
#include "ewrithe/verify.h"
#include "ewrithe/writhe.h"

namespace {

using namespace ewrithe;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitSampling = 3;

Vec4<Rational> parse_center(const std::string& text) {
  Vec4<Rational> c;
  std::stringstream in(text);
  std::string part;
  int k = 0;
  while (std::getline(in, part, ',')) {
    if (k == 4) throw Error(ErrorKind::ParseError, "center needs four coordinates");
    c[k++] = parse_rational(part);
  }
  if (k != 4) throw Error(ErrorKind::ParseError, "center needs four coordinates");
  return c;
}

bool is_genericity_failure(ErrorKind k) {
  return k == ErrorKind::NonGenericProjection || k == ErrorKind::TangentialPair ||
         k == ErrorKind::CenterOnSingularLine || k == ErrorKind::CenterOnCurve;
}

// The canonical center when it is generic, otherwise a sampled one.
Diagram diagram_for(const Link& link, const std::string& center, std::uint64_t seed) {
  if (!center.empty()) return build_diagram(link, parse_center(center));
  try {
    return build_diagram(link, canonical_center());
  } catch (const Error& e) {
    if (!is_genericity_failure(e.kind())) throw;
  }
  return build_diagram(sample_generic_projection(link, seed));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encomplexed writhe of real rational space curves and links"};
  app.require_subcommand(1);

  std::string path;
  std::string center;
  std::uint64_t seed = 0;
  bool json_output = false;

  auto* writhe = app.add_subcommand("writhe", "Compute the writhe of a curve or link file");
  writhe->add_option("file", path, "Curve file (JSON lines)")->required();
  writhe->add_option("--center", center, "Projection center as a,b,c,d (X,Y,Z,W)");
  writhe->add_option("--seed", seed, "Seed for center sampling when the default center is not generic");
  writhe->add_flag("--json", json_output, "Print a JSON report");

  int centers = 20;
  int isotopies = 20;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Check center independence and rigid-isotopy invariance");
  verify->add_option("file", path, "Curve file")->required();
  verify->add_option("--centers", centers, "Number of random centers")->check(CLI::NonNegativeNumber);
  verify->add_option("--isotopies", isotopies, "Number of transforms of each orientation class")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed");
  verify->add_option("--report", report_path, "Write the JSON report to this file");

  int degree = 3;
  int count = 1;
  int bound = 5;
  std::string out_dir = ".";
  auto* sample = app.add_subcommand("sample", "Write random validated curves");
  sample->add_option("--degree", degree, "Degree")->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", count, "Number of curves")->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", seed, "Seed");
  sample->add_option("--bound", bound, "Coefficient bound")->check(CLI::PositiveNumber);
  sample->add_option("--out", out_dir, "Output directory");

  std::string svg_path;
  auto* diagram = app.add_subcommand("diagram", "Render the projected diagram as SVG");
  diagram->add_option("file", path, "Curve file")->required();
  diagram->add_option("--out", svg_path, "SVG file (stdout when omitted)");
  diagram->add_option("--center", center, "Projection center as a,b,c,d");
  diagram->add_option("--seed", seed, "Seed for center sampling");

  std::vector<std::string> grid_text;
  auto* scan = app.add_subcommand("scan", "Writhe along a one-parameter family");
  scan->add_option("file", path, "Family file")->required();
  scan->add_option("--grid", grid_text, "Parameter values (overrides the file grid)");
  scan->add_option("--seed", seed, "Seed for center sampling");

  CLI11_PARSE(app, argc, argv);

  try {
    if (writhe->parsed()) {
      const Diagram d = diagram_for(load_link(path), center, seed);
      std::cout << (json_output ? writhe_json(d) + "\n" : writhe_text(d));
      return kExitOk;
    }
    if (verify->parsed()) {
      const Link link = load_link(path);
      std::vector<VerificationRun> runs{verify_center_independence(link, centers, seed),
                                        verify_isotopy_invariance(link, isotopies, seed)};
      bool passed = true;
      for (const auto& r : runs) {
        std::cout << verification_text(r);
        passed = passed && r.passed;
      }
      if (runs[0].reference && runs[1].reference && *runs[0].reference != *runs[1].reference) {
        std::cout << "center and isotopy runs disagree on the writhe\n";
        passed = false;
      }
      std::cout << (passed ? "pass" : "FAIL");
      if (passed && runs[0].reference) std::cout << ", Cw = " << *runs[0].reference;
      std::cout << "\n";
      if (!report_path.empty()) write_file(report_path, verification_json(runs) + "\n");
      return passed ? kExitOk : kExitVerificationFailed;
    }
    if (sample->parsed()) {
      std::filesystem::create_directories(out_dir);
      for (int k = 0; k < count; ++k) {
        const auto curve = sample_random_curve(degree, derive_seed(seed, static_cast<std::uint64_t>(k)), bound);
        const auto file = (std::filesystem::path(out_dir) /
                           ("curve_d" + std::to_string(degree) + "_" + std::to_string(k) + ".jsonl"))
                              .string();
        write_file(file, write_link(Link({curve})));
        std::cout << file << "\n";
      }
      return kExitOk;
    }
    if (diagram->parsed()) {
      const std::string svg = diagram_svg(diagram_for(load_link(path), center, seed));
      if (svg_path.empty()) {
        std::cout << svg;
      } else {
        write_file(svg_path, svg);
      }
      return kExitOk;
    }
    if (scan->parsed()) {
      const CurveFile file = parse_curve_file(path);
      if (!file.is_family()) throw Error(ErrorKind::InvalidInput, path + " has no parameter");
      std::vector<Rational> grid = file.family->grid;
      if (!grid_text.empty()) {
        grid.clear();
        for (const auto& g : grid_text) grid.push_back(parse_rational(g));
      }
      if (grid.empty()) throw Error(ErrorKind::InvalidInput, "empty parameter grid");
      const auto members = scan_family(*file.family, grid, seed);
      std::cout << family_text(members, family_jumps(members));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SamplingExhausted ? kExitSampling : kExitInput;
  }
  return kExitOk;
}
