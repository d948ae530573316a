#include "ewrithe/io.h"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "ewrithe/error.h"

namespace ewrithe {

namespace {

using nlohmann::json;

constexpr std::array<const char*, 4> kCoordNames{"x", "y", "z", "w"};

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Recursive-descent reader for polynomial expressions in one name.
class ExpressionReader {
 public:
  ExpressionReader(std::string_view text, const std::string& name) : text_(text), name_(name) {}

  UPoly read() {
    UPoly p = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  UPoly sum() {
    skip_space();
    bool negative = false;
    if (peek('+') || peek('-')) negative = text_[pos_++] == '-';
    UPoly acc = product();
    if (negative) acc = -acc;
    while (true) {
      skip_space();
      if (!peek('+') && !peek('-')) return acc;
      const bool minus = text_[pos_++] == '-';
      const UPoly t = product();
      acc = minus ? acc - t : acc + t;
    }
  }

  UPoly product() {
    UPoly acc = factor();
    while (true) {
      skip_space();
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('/')) {
        ++pos_;
        const UPoly d = factor();
        if (d.degree() != 0) fail("division by a non-constant");
        acc = acc * (1 / d.leading());
      } else {
        return acc;
      }
    }
  }

  UPoly factor() {
    skip_space();
    if (peek('(')) {
      ++pos_;
      UPoly p = sum();
      skip_space();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return power(p);
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return UPoly::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (text_.substr(pos_, name_.size()) == name_) {
      pos_ += name_.size();
      return power(UPoly::variable());
    }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
  }

  UPoly power(const UPoly& base) {
    skip_space();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent expected");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    UPoly r = UPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, "expression '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  const std::string& name_;
  std::size_t pos_ = 0;
};

// A coefficient as a polynomial in the parameter (constant when none).
UPoly read_coefficient(const json& v, const std::optional<std::string>& parameter, const std::string& where) {
  if (v.is_number_integer()) return UPoly::constant(Rational(Integer(v.dump())));
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    try {
      if (parameter) return ExpressionReader(s, *parameter).read();
      return UPoly::constant(parse_rational(s));
    } catch (const Error& e) {
      parse_fail(where, e.what());
    }
  }
  parse_fail(where, "coefficients must be integers or strings, got " + v.dump());
}

struct ComponentRecord {
  json value;
  std::string where;
};

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

std::string sign_list(const Diagram& d, LocusKind kind) {
  std::string out;
  for (const auto& l : d.loci) {
    if (l.locus.kind != kind) continue;
    out += out.empty() ? "" : ", ";
    out += sign_text(l.sign);
  }
  return out;
}

std::string count_phrase(int n, const char* singular, const char* plural, const std::string& signs) {
  std::string s = std::to_string(n) + " " + (n == 1 ? singular : plural);
  if (n > 0) s += " (" + signs + ")";
  return s;
}

std::string center_text(const Vec4<Rational>& c) {
  return "(" + to_string(c[0]) + " : " + to_string(c[1]) + " : " + to_string(c[2]) + " : " + to_string(c[3]) + ")";
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

UPoly parse_parameter_polynomial(std::string_view text, const std::string& name) {
  return ExpressionReader(text, name).read();
}

CurveFile parse_curve_text(std::string_view text, const std::string& source) {
  std::vector<ComponentRecord> records;
  std::optional<std::vector<int>> orientations;
  std::optional<std::string> parameter;
  std::vector<Rational> grid;
  std::string orientation_where;

  std::istringstream in{std::string(text)};
  std::string raw;
  for (int lineno = 1; std::getline(in, raw); ++lineno) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = source + ":" + std::to_string(lineno);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error&) {
      parse_fail(where, "invalid JSON");
    }
    if (!obj.is_object()) parse_fail(where, "each line must be a JSON object");
    if (obj.contains("x") || obj.contains("y") || obj.contains("z") || obj.contains("w")) {
      for (const auto& [key, _] : obj.items()) {
        if (key != "x" && key != "y" && key != "z" && key != "w") parse_fail(where, "unknown key '" + key + "'");
      }
      records.push_back({obj, where});
    } else if (obj.contains("orientations")) {
      if (obj.size() != 1 || !obj["orientations"].is_array()) parse_fail(where, "orientations must be a list");
      orientations.emplace();
      for (const auto& f : obj["orientations"]) {
        if (!f.is_number_integer() || (f.get<int>() != 1 && f.get<int>() != -1)) {
          parse_fail(where, "orientation flags must be 1 or -1");
        }
        orientations->push_back(f.get<int>());
      }
      orientation_where = where;
    } else if (obj.contains("parameter")) {
      if (!obj["parameter"].is_string()) parse_fail(where, "parameter must be a name");
      parameter = obj["parameter"].get<std::string>();
      if (parameter->empty() || !std::all_of(parameter->begin(), parameter->end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); })) {
        parse_fail(where, "parameter names are alphabetic");
      }
      for (const auto& [key, value] : obj.items()) {
        if (key == "parameter") continue;
        if (key != "grid" || !value.is_array()) parse_fail(where, "unknown key '" + key + "'");
        for (const auto& g : value) {
          const UPoly c = read_coefficient(g, std::nullopt, where + ", grid");
          grid.push_back(c.is_zero() ? Rational(0) : c.leading());
        }
      }
    } else {
      parse_fail(where, "unrecognized record");
    }
  }
  if (records.empty()) parse_fail(source, "no components");
  if (orientations && orientations->size() != records.size()) {
    parse_fail(orientation_where, "expected " + std::to_string(records.size()) + " orientation flags");
  }

  CurveFamily family;
  family.parameter = parameter.value_or("tau");
  family.orientations = orientations;
  family.grid = grid;
  for (std::size_t c = 0; c < records.size(); ++c) {
    const auto& rec = records[c];
    Vec4<std::vector<UPoly>> coords;
    bool all_zero = true;
    for (int i = 0; i < 4; ++i) {
      const std::string where = rec.where + ", component " + std::to_string(c) + ", coordinate " + kCoordNames[i];
      if (!rec.value.contains(kCoordNames[i])) parse_fail(where, "missing");
      const json& list = rec.value[kCoordNames[i]];
      if (!list.is_array()) parse_fail(where, "coefficients must be a list");
      for (std::size_t k = 0; k < list.size(); ++k) {
        coords[i].push_back(read_coefficient(list[k], parameter, where + ", coefficient " + std::to_string(k)));
        all_zero = all_zero && coords[i].back().is_zero();
      }
    }
    if (all_zero) parse_fail(rec.where + ", component " + std::to_string(c), "all four coordinates are zero");
    family.components.push_back(std::move(coords));
  }

  CurveFile file;
  if (parameter) {
    file.family = std::move(family);
  } else {
    file.link = family.member(0);
  }
  return file;
}

CurveFile parse_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_curve_text(buf.str(), path);
}

Link load_link(const std::string& path) {
  CurveFile f = parse_curve_file(path);
  if (f.is_family()) throw Error(ErrorKind::InvalidInput, path + " describes a family; use the scan command");
  validate(*f.link);
  return *f.link;
}

std::string write_link(const Link& link) {
  std::string out;
  for (const auto& c : link.components) {
    json obj;
    for (int i = 0; i < 4; ++i) {
      json list = json::array();
      for (int k = 0; k <= c.coord(i).degree(); ++k) list.push_back(to_string(c.coord(i).coeff(k)));
      if (list.empty()) list.push_back("0");
      obj[kCoordNames[i]] = list;
    }
    out += obj.dump() + "\n";
  }
  if (link.orientations) out += json{{"orientations", *link.orientations}}.dump() + "\n";
  return out;
}

std::string writhe_summary(const Diagram& d) {
  const int w = writhe_unoriented(d);
  if (d.loci.empty()) return "Cw = " + std::to_string(w) + "; empty diagram";
  std::string s = "Cw = " + std::to_string(w);
  s += "; " + count_phrase(d.count(LocusKind::Crossing), "crossing", "crossings", sign_list(d, LocusKind::Crossing));
  s += "; " + count_phrase(d.count(LocusKind::Solitary), "solitary", "solitary", sign_list(d, LocusKind::Solitary));
  const int inter = d.count(LocusKind::InterComponentCrossing);
  if (inter > 0) {
    s += "; " + count_phrase(inter, "inter-component crossing", "inter-component crossings",
                             sign_list(d, LocusKind::InterComponentCrossing));
  }
  return s;
}

std::string writhe_text(const Diagram& d) {
  std::ostringstream out;
  out << writhe_summary(d) << "\n";
  out << "center: " << center_text(d.center) << "\n";
  out << "complex double points: " << d.complex_double_points << "\n";
  if (d.oriented()) {
    out << "Cw oriented = " << writhe_oriented(d) << "\n";
    out << "linking matrix:\n";
    for (const auto& row : linking_matrix(d)) {
      out << " ";
      for (const auto& x : row) out << " " << std::setw(5) << to_string(x);
      out << "\n";
    }
  }
  if (!d.loci.empty()) {
    out << "loci:\n";
    out << "  pair  kind                      sign  e or s        f or t\n";
    for (const auto& l : d.loci) {
      out << "  " << std::left << std::setw(6) << (std::to_string(l.locus.i) + "-" + std::to_string(l.locus.j))
          << std::setw(26) << to_string(l.locus.kind) << std::setw(6) << sign_text(l.sign) << std::setw(14)
          << fixed(l.locus.point.approx(0)) << fixed(l.locus.point.approx(1)) << std::right << "\n";
    }
  }
  return out.str();
}

std::string writhe_json(const Diagram& d) {
  json out;
  out["center"] = rational_list({d.center.begin(), d.center.end()});
  out["writhe"] = writhe_unoriented(d);
  out["complex_double_points"] = d.complex_double_points;
  if (d.oriented()) {
    out["oriented_writhe"] = writhe_oriented(d);
    json lk = json::array();
    for (const auto& row : linking_matrix(d)) lk.push_back(rational_list(row));
    out["linking"] = lk;
  }
  json loci = json::array();
  for (const auto& l : d.loci) {
    const auto& th = l.locus.point.theta();
    loci.push_back({{"components", {l.locus.i, l.locus.j}},
                    {"kind", to_string(l.locus.kind)},
                    {"sign", l.sign},
                    {"eliminant", to_string(th.defining(), "w")},
                    {"interval", {to_string(th.lo()), to_string(th.hi())}},
                    {"approx", {l.locus.point.approx(0), l.locus.point.approx(1)}}});
  }
  out["loci"] = loci;
  return out.dump(2);
}

std::string verification_text(const VerificationRun& run) {
  std::ostringstream out;
  out << run.property << ": " << (run.passed ? "pass" : "FAIL") << " (" << run.records.size() << " trials, seed "
      << run.seed << ")";
  if (run.reference) out << ", reference value " << *run.reference;
  out << ", attained {";
  bool first = true;
  for (int v : run.attained) {
    out << (first ? "" : ", ") << v;
    first = false;
  }
  out << "}\n";
  for (const auto& r : run.records) {
    if (!r.ok) out << "  mismatch: " << r.subject << " gave " << r.value << ", expected " << r.expected << "\n";
  }
  return out.str();
}

std::string verification_json(const std::vector<VerificationRun>& runs) {
  json out = json::array();
  for (const auto& run : runs) {
    json trials = json::array();
    for (const auto& r : run.records) {
      trials.push_back({{"subject", r.subject}, {"value", r.value}, {"expected", r.expected}, {"ok", r.ok}});
    }
    json j{{"property", run.property},
           {"seed", run.seed},
           {"passed", run.passed},
           {"attained", std::vector<int>(run.attained.begin(), run.attained.end())},
           {"trials", trials}};
    if (run.reference) j["reference"] = *run.reference;
    out.push_back(j);
  }
  return out.dump(2);
}

std::string family_text(const std::vector<FamilyMember>& scan, const std::vector<FamilyJump>& jumps) {
  std::ostringstream out;
  for (const auto& m : scan) {
    out << std::setw(10) << to_string(m.value) << "  ";
    if (m.writhe) {
      out << "Cw = " << *m.writhe << "\n";
    } else {
      out << "singular (" << m.singular << ")\n";
    }
  }
  for (const auto& j : jumps) {
    if (j.delta == 0 && !j.across_singular) continue;
    out << "jump " << (j.delta > 0 ? "+" : "") << j.delta << " between " << to_string(j.from) << " and " << to_string(j.to)
        << (j.across_singular ? " (across a singular member)" : "") << "\n";
  }
  return out.str();
}

namespace {

using Cplx = std::complex<double>;

struct PlanePoint {
  double x;
  double y;
  bool valid;
};

// Projected point (X/W, Y/W) at the homogeneous parameter (a : b).
template <typename T>
std::array<T, 3> projected_at(const RationalSpaceCurve& c, T a, T b) {
  std::array<T, 3> out{};
  const std::array<int, 3> idx{kX, kY, kW};
  for (int k = 0; k < 3; ++k) {
    const UPoly& p = c.coord(idx[k]);
    T acc{};
    for (int i = c.degree(); i >= 0; --i) {
      acc = acc * a + T(p.coeff(i).get_d()) * std::pow(b, c.degree() - i);
    }
    out[k] = acc;
  }
  return out;
}

PlanePoint plane_point(const RationalSpaceCurve& c, double theta) {
  const auto v = projected_at<double>(c, std::sin(theta), std::cos(theta));
  if (std::abs(v[2]) < 1e-12) return {0, 0, false};
  return {v[0] / v[2], v[1] / v[2], true};
}

PlanePoint plane_point(const RationalSpaceCurve& c, Cplx t) {
  const auto v = projected_at<Cplx>(c, t, Cplx(1.0));
  if (std::abs(v[2]) < 1e-12) return {0, 0, false};
  return {(v[0] / v[2]).real(), (v[1] / v[2]).real(), true};
}

double theta_of(double t) { return std::atan(t); }

struct Marker {
  LocusKind kind;
  int sign;
  PlanePoint at;
  // Under-strand: component and parameter angle; component -1 for none.
  long under_component = -1;
  double under_theta = 0;
};

std::string xml_comment_safe(std::string s) {
  for (std::size_t p = s.find("--"); p != std::string::npos; p = s.find("--")) s.replace(p, 2, "- -");
  return s;
}

}  // namespace

std::string diagram_svg(const Diagram& d) {
  constexpr int kSize = 600;
  constexpr int kSamples = 2400;
  constexpr double kGap = 9.0;
  static constexpr std::array<const char*, 6> kColors{"#1f4e9c", "#b8401a", "#2a7a3b", "#7a3b8f", "#8f6d1a", "#1a7a7a"};

  std::vector<Marker> markers;
  for (const auto& sl : d.loci) {
    const auto& l = sl.locus;
    const double a = l.point.approx(0);
    const double b = l.point.approx(1);
    Marker m{l.kind, sl.sign, {0, 0, false}};
    if (l.kind == LocusKind::Solitary) {
      const double im = std::sqrt(std::max(0.0, 4 * b - a * a)) / 2;
      m.at = plane_point(d.link.components[l.i], Cplx(a / 2, im));
    } else {
      double s = a;
      double t = b;
      if (l.kind == LocusKind::Crossing) {
        const double r = std::sqrt(std::max(0.0, a * a - 4 * b));
        s = (a + r) / 2;
        t = (a - r) / 2;
      }
      m.at = plane_point(d.link.components[l.i], Cplx(s, 0));
      const int upper = upper_preimage(d.link, l);
      if (upper != 0) {
        m.under_component = static_cast<long>(upper > 0 ? l.j : l.i);
        m.under_theta = theta_of(upper > 0 ? t : s);
      }
    }
    markers.push_back(m);
  }

  std::vector<std::vector<PlanePoint>> samples;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& c : d.link.components) {
    std::vector<PlanePoint> pts;
    for (int k = 0; k <= kSamples; ++k) {
      const double theta = -std::numbers::pi / 2 + std::numbers::pi * k / kSamples;
      pts.push_back(plane_point(c, theta));
      if (pts.back().valid) {
        xs.push_back(pts.back().x);
        ys.push_back(pts.back().y);
      }
    }
    samples.push_back(std::move(pts));
  }
  for (const auto& m : markers) {
    if (!m.at.valid) continue;
    xs.push_back(m.at.x);
    ys.push_back(m.at.y);
  }
  auto range = [](std::vector<double> v) {
    if (v.empty()) return std::pair<double, double>{-1, 1};
    std::sort(v.begin(), v.end());
    const auto lo = v[v.size() / 4];
    const auto hi = v[v.size() - 1 - v.size() / 4];
    return std::pair<double, double>{lo, hi};
  };
  auto [x0, x1] = range(xs);
  auto [y0, y1] = range(ys);
  for (const auto& m : markers) {
    if (!m.at.valid) continue;
    x0 = std::min(x0, m.at.x);
    x1 = std::max(x1, m.at.x);
    y0 = std::min(y0, m.at.y);
    y1 = std::max(y1, m.at.y);
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-6}) * 1.6;
  const double cx = (x0 + x1) / 2;
  const double cy = (y0 + y1) / 2;
  auto sx = [&](double x) { return kSize / 2.0 + (x - cx) / span * kSize; };
  auto sy = [&](double y) { return kSize / 2.0 - (y - cy) / span * kSize; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
      << kSize << " " << kSize << "\">\n";
  out << "<!--\n";
  out << xml_comment_safe(writhe_summary(d)) << "\n";
  out << "center " << xml_comment_safe(center_text(d.center)) << "\n";
  for (const auto& sl : d.loci) {
    const auto& th = sl.locus.point.theta();
    out << xml_comment_safe("locus " + std::to_string(sl.locus.i) + "-" + std::to_string(sl.locus.j) + " " +
                            to_string(sl.locus.kind) + " sign " + sign_text(sl.sign) + " at w = root of " +
                            to_string(th.defining(), "w") + " in [" + to_string(th.lo()) + ", " + to_string(th.hi()) +
                            "]")
        << "\n";
  }
  out << "-->\n";
  out << "<defs><clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize
      << "\"/></clipPath></defs>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g clip-path=\"url(#frame)\" fill=\"none\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
  for (std::size_t c = 0; c < samples.size(); ++c) {
    const auto& pts = samples[c];
    std::string path;
    bool open = false;
    for (int k = 0; k <= kSamples; ++k) {
      const auto& p = pts[static_cast<std::size_t>(k)];
      const double theta = -std::numbers::pi / 2 + std::numbers::pi * k / kSamples;
      bool draw = p.valid && std::abs(sx(p.x)) < 50 * kSize && std::abs(sy(p.y)) < 50 * kSize;
      for (const auto& m : markers) {
        if (!draw || m.under_component != static_cast<long>(c)) continue;
        const double dtheta = std::remainder(theta - m.under_theta, std::numbers::pi);
        if (std::abs(dtheta) < 0.25 && std::hypot(sx(p.x) - sx(m.at.x), sy(p.y) - sy(m.at.y)) < kGap) draw = false;
      }
      if (draw && open && k > 0) {
        const auto& q = pts[static_cast<std::size_t>(k - 1)];
        if (std::hypot(sx(p.x) - sx(q.x), sy(p.y) - sy(q.y)) > kSize / 4.0) open = false;
      }
      if (!draw) {
        open = false;
        continue;
      }
      std::ostringstream seg;
      seg << std::fixed << std::setprecision(2) << (open ? " L" : " M") << sx(p.x) << " " << sy(p.y);
      path += seg.str();
      open = true;
    }
    out << "<path stroke=\"" << kColors[c % kColors.size()] << "\" d=\"" << path << "\"/>\n";
  }
  out << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"13\">\n";
  for (const auto& m : markers) {
    if (!m.at.valid) continue;
    const double x = sx(m.at.x);
    const double y = sy(m.at.y);
    if (m.kind == LocusKind::Solitary) {
      out << "<line x1=\"" << x - 8 << "\" y1=\"" << y - 8 << "\" x2=\"" << x + 8 << "\" y2=\"" << y + 8
          << "\" stroke=\"black\" stroke-dasharray=\"3 2\"/>\n";
      out << "<line x1=\"" << x - 8 << "\" y1=\"" << y + 8 << "\" x2=\"" << x + 8 << "\" y2=\"" << y - 8
          << "\" stroke=\"black\" stroke-dasharray=\"3 2\"/>\n";
      out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3.5\" fill=\"black\"/>\n";
    }
    out << "<text x=\"" << x + 12 << "\" y=\"" << y - 12 << "\">" << sign_text(m.sign) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace ewrithe
