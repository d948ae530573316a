#pragma once

// Integer-coefficient helpers shared by the exact-algebra sources.

#include <vector>

#include "ewrithe/upoly.h"

namespace ewrithe::detail {

using IPoly = std::vector<Integer>;  // lowest degree first, no trailing zeros

IPoly to_primitive_ipoly(const UPoly& p);
UPoly to_upoly(const IPoly& p);
int ideg(const IPoly& p);
void itrim(IPoly& p);
Integer icontent(const IPoly& p);
/// Divides by the content and makes the leading coefficient positive.
void make_primitive(IPoly& p);
/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IPoly pseudo_remainder(IPoly a, const IPoly& b);
/// Degree of gcd(a, b) modulo a prime not dividing either leading
/// coefficient, or -2 when no usable prime was found.
int modular_gcd_degree(const IPoly& a, const IPoly& b);

}  // namespace ewrithe::detail
