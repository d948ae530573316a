#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ewrithe/verify.h"
#include "ewrithe/writhe.h"

namespace ewrithe {

/// Contents of a curve file: a link, or a one-parameter family when a
/// parameter line is present.
struct CurveFile {
  std::optional<CurveFamily> family;
  std::optional<Link> link;

  bool is_family() const { return family.has_value(); }
};

/// Parses the line-oriented JSON curve format. Each non-empty line not
/// starting with '#' is one JSON object:
///   {"x": [...], "y": [...], "z": [...], "w": [...]}   a component
///   {"orientations": [1, -1]}                          orientation flags
///   {"parameter": "tau", "grid": [-1, "1/2"]}          family parameter
/// Coefficients are integers or strings ("p/q"; in families, polynomial
/// expressions such as "1+tau/2"), lowest degree first. Throws
/// Error(ParseError) naming the line, component and coordinate.
CurveFile parse_curve_text(std::string_view text, const std::string& source = "<input>");
CurveFile parse_curve_file(const std::string& path);

/// Parses and validates a plain (non-family) link file.
Link load_link(const std::string& path);

/// Polynomial in `name` from an expression like "-1-tau" or "3/2*tau^2".
UPoly parse_parameter_polynomial(std::string_view text, const std::string& name);

/// Serializes a link in the curve format, rationals as strings.
std::string write_link(const Link& link);

/// "Cw = -1; 1 crossing (-1); 0 solitary".
std::string writhe_summary(const Diagram& diagram);
/// Human-readable report: summary, center, oriented data and locus table.
std::string writhe_text(const Diagram& diagram);
std::string writhe_json(const Diagram& diagram);

std::string verification_text(const VerificationRun& run);
std::string verification_json(const std::vector<VerificationRun>& runs);

std::string family_text(const std::vector<FamilyMember>& scan, const std::vector<FamilyJump>& jumps);

/// SVG picture of the projected link with crossing gaps and solitary
/// markers. Curve strokes are sampled in floating point; the exact locus
/// data is embedded in a comment.
std::string diagram_svg(const Diagram& diagram);

}  // namespace ewrithe
