#pragma once

#include <utility>
#include <vector>

#include "ewrithe/bpoly.h"
#include "ewrithe/upoly.h"

namespace ewrithe {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant (fraction-free elimination after clearing row
/// denominators). The matrix must be square.
Rational determinant(const RationalMatrix& m);

/// Sylvester-matrix resultant of two univariate polynomials.
/// Throws Error(InvalidInput) when either argument is zero.
Rational resultant(const UPoly& p, const UPoly& q);

/// Resultant eliminating `eliminated`; the result is a polynomial in the
/// other variable. Formal degrees are taken from the bivariate structure,
/// so the value commutes with specialising the remaining variable.
UPoly resultant(const BPoly& p, const BPoly& q, Var eliminated);

/// First subresultant S1 = a*x + b of p and q with respect to x, returned
/// as (a, b) in y. Requires deg_x p >= deg_x q >= 2.
std::pair<UPoly, UPoly> first_subresultant_x(const BPoly& p, const BPoly& q);

/// Polynomial through (xs[i], ys[i]); xs pairwise distinct.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace ewrithe
