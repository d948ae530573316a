#include "ewrithe/resultant.h"

#include <cassert>

#include "ewrithe/error.h"

namespace ewrithe {

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    assert(m[i].size() == n);
    Integer lcm = 1;
    for (const auto& c : m[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), lcm.get_mpz_t(), m[i][j].get_den_mpz_t());
      a[i][j] = m[i][j].get_num() * q;
    }
    scale *= lcm;
  }
  // Bareiss elimination.
  int sign = 1;
  Integer prev = 1;
  Integer t1;
  Integer t2;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(t1.get_mpz_t(), a[i][j].get_mpz_t(), a[k][k].get_mpz_t());
        mpz_mul(t2.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

namespace {

// Coefficients from highest to lowest, padded to the formal degree.
std::vector<Rational> high_first(const UPoly& p, int formal_degree) {
  std::vector<Rational> out(static_cast<std::size_t>(formal_degree) + 1);
  for (int i = 0; i <= formal_degree; ++i) out[static_cast<std::size_t>(formal_degree - i)] = p.coeff(i);
  return out;
}

RationalMatrix sylvester(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  RationalMatrix s(m + n, std::vector<Rational>(m + n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = p[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = q[j];
  return s;
}

Rational formal_resultant(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  return determinant(sylvester(p, q));
}

// Coefficients (x^1, x^0) of the first subresultant for formal degrees
// m >= n >= 2.
std::pair<Rational, Rational> formal_s1(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  const std::size_t rows = m + n - 2;
  const std::size_t cols = m + n - 1;  // powers m+n-2 ... 0
  RationalMatrix full(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) full[i][i + j] = p[j];
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) full[n - 1 + i][i + j] = q[j];
  auto pick = [&](std::size_t last_col) {
    RationalMatrix sub(rows, std::vector<Rational>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j + 1 < rows; ++j) sub[i][j] = full[i][j];
      sub[i][rows - 1] = full[i][last_col];
    }
    return determinant(sub);
  };
  // Column index of x^k is cols-1-k.
  return {pick(cols - 2), pick(cols - 1)};
}

std::vector<Rational> sample_points(int count) {
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(count));
  long k = 0;
  while (static_cast<int>(xs.size()) < count) {
    xs.emplace_back(k);
    if (k > 0) {
      if (static_cast<int>(xs.size()) < count) xs.emplace_back(-k);
    }
    ++k;
  }
  return xs;
}

void require_nonzero(const BPoly& p, const BPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::InvalidInput, "resultant of a zero polynomial");
}

}  // namespace

Rational resultant(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::InvalidInput, "resultant of a zero polynomial");
  return formal_resultant(high_first(p, p.degree()), high_first(q, q.degree()));
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  // Newton form to monomial basis.
  UPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * UPoly{-xs[i], Rational(1)};
    acc += UPoly::constant(dd[i]);
  }
  return acc;
}

UPoly resultant(const BPoly& p0, const BPoly& q0, Var eliminated) {
  require_nonzero(p0, q0);
  const BPoly p = eliminated == Var::X ? p0 : p0.swapped();
  const BPoly q = eliminated == Var::X ? q0 : q0.swapped();
  const int m = p.degree_x();
  const int n = q.degree_x();
  const int bound = n * std::max(p.degree_y(), 0) + m * std::max(q.degree_y(), 0);
  const auto xs = sample_points(bound + 1);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& y0 : xs) ys.push_back(formal_resultant(high_first(p.at_y(y0), m), high_first(q.at_y(y0), n)));
  return interpolate(xs, ys);
}

std::pair<UPoly, UPoly> first_subresultant_x(const BPoly& p, const BPoly& q) {
  require_nonzero(p, q);
  const int m = p.degree_x();
  const int n = q.degree_x();
  if (m < n || n < 2) throw Error(ErrorKind::InvalidInput, "first subresultant needs deg p >= deg q >= 2");
  const int bound = (n - 1) * std::max(p.degree_y(), 0) + (m - 1) * std::max(q.degree_y(), 0);
  const auto xs = sample_points(bound + 1);
  std::vector<Rational> as;
  std::vector<Rational> bs;
  for (const auto& y0 : xs) {
    auto [a, b] = formal_s1(high_first(p.at_y(y0), m), high_first(q.at_y(y0), n));
    as.push_back(std::move(a));
    bs.push_back(std::move(b));
  }
  return {interpolate(xs, as), interpolate(xs, bs)};
}

}  // namespace ewrithe
