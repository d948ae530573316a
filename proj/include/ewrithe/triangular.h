#pragma once

#include <vector>

#include "ewrithe/algebraic.h"
#include "ewrithe/bpoly.h"

namespace ewrithe {

/// Solution set of a zero-dimensional bivariate system in shape form.
/// With w = y + shift * x, the solutions over C correspond one-to-one to
/// the roots of the square-free eliminant, and each solution is
/// (x, y) = (x_num(w), y_num(w)) / den(w).
struct TriangularSystem {
  UPoly eliminant;
  Rational shift;
  UPoly x_num;
  UPoly y_num;
  UPoly den;

  /// Number of distinct complex solutions.
  int solution_count() const { return eliminant.degree(); }
  /// den^m * p at the generic solution, modulo the eliminant. Its gcd with
  /// the eliminant cuts out the solutions where p vanishes.
  UPoly reduce(const BPoly& p) const;
  /// Eliminant factor cutting out the solutions where p vanishes.
  UPoly vanishing_factor(const BPoly& p) const;
  std::vector<AlgebraicPoint> real_solutions() const;
};

/// Triangularizes the system eqs = 0 in (x, y). Zero equations are ignored;
/// a nonzero constant yields an empty system. Throws
/// Error(DegenerateElimination) when the system is not zero-dimensional or
/// no shear separates the solutions.
TriangularSystem triangularize(const std::vector<BPoly>& eqs);

}  // namespace ewrithe
