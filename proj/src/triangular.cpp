#include "ewrithe/triangular.h"

#include <optional>

#include "ewrithe/error.h"
#include "ewrithe/resultant.h"

namespace ewrithe {

namespace {

constexpr int kMaxShift = 12;

TriangularSystem empty_system() {
  TriangularSystem sys;
  sys.eliminant = UPoly::constant(1);
  sys.shift = 0;
  sys.x_num = UPoly{};
  sys.y_num = UPoly{};
  sys.den = UPoly::constant(1);
  return sys;
}

bool constant_leading(const BPoly& p) { return p.degree_x() >= 1 && p.rows().back().degree() == 0; }

std::optional<TriangularSystem> try_strategy(const std::vector<BPoly>& eqs, std::size_t i, std::size_t j, const Rational& k) {
  BPoly h1 = eqs[i].sheared(k);
  BPoly h2 = eqs[j].sheared(k);
  if (h1.degree_x() < h2.degree_x()) std::swap(h1, h2);
  if (h2.degree_x() < 1) return std::nullopt;
  if (!constant_leading(h1) && !constant_leading(h2)) return std::nullopt;
  const UPoly r = resultant(h1, h2, Var::X);
  if (r.is_zero()) return std::nullopt;
  if (r.degree() == 0) return empty_system();

  UPoly a;
  UPoly b;
  if (h2.degree_x() == 1) {
    a = h2.rows()[1];
    b = h2.rows()[0];
  } else {
    std::tie(a, b) = first_subresultant_x(h1, h2);
  }
  if (a.is_zero() || !coprime(r, a)) return std::nullopt;

  TriangularSystem sys;
  sys.shift = k;
  sys.eliminant = squarefree_part(r);
  const UPoly w = UPoly::variable();
  sys.den = remainder(a, sys.eliminant);
  sys.x_num = remainder(-b, sys.eliminant);
  sys.y_num = remainder(w * a + b * k, sys.eliminant);
  UPoly t = sys.eliminant;
  for (const auto& eq : eqs) {
    if (t.degree() == 0) break;
    t = gcd(t, sys.reduce(eq));
  }
  sys.eliminant = t;
  sys.den = remainder(sys.den, t);
  sys.x_num = remainder(sys.x_num, t);
  sys.y_num = remainder(sys.y_num, t);
  return sys;
}

}  // namespace

UPoly TriangularSystem::reduce(const BPoly& p) const { return substitute_mod(p, x_num, y_num, den, eliminant); }

UPoly TriangularSystem::vanishing_factor(const BPoly& p) const {
  if (eliminant.degree() <= 0) return UPoly::constant(1);
  return gcd(eliminant, reduce(p));
}

std::vector<AlgebraicPoint> TriangularSystem::real_solutions() const {
  std::vector<AlgebraicPoint> out;
  if (eliminant.degree() <= 0) return out;
  for (auto& root : isolate_real_roots(eliminant)) out.emplace_back(std::move(root), std::vector<UPoly>{x_num, y_num}, den);
  return out;
}

TriangularSystem triangularize(const std::vector<BPoly>& eqs) {
  std::vector<BPoly> live;
  for (const auto& e : eqs) {
    if (e.is_zero()) continue;
    if (e.total_degree() == 0) return empty_system();
    live.push_back(e);
  }
  if (live.size() < 2) throw Error(ErrorKind::DegenerateElimination, "fewer than two independent equations");
  for (int step = 0; step <= 2 * kMaxShift; ++step) {
    const Rational k = step % 2 == 0 ? Rational(step / 2) : Rational(-(step + 1) / 2);
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        if (auto sys = try_strategy(live, i, j, k)) return *std::move(sys);
      }
    }
  }
  throw Error(ErrorKind::DegenerateElimination, "no separating shear found", to_string(live.front(), "x", "y"));
}

}  // namespace ewrithe
