#include "ewrithe/algebraic.h"

#include <algorithm>
#include <sstream>

#include "ewrithe/detail/ipoly.h"
#include "ewrithe/error.h"

namespace ewrithe {

namespace {

using detail::IPoly;

RationalInterval mul(const RationalInterval& a, const RationalInterval& b) {
  Rational p1 = a.lo * b.lo;
  Rational p2 = a.lo * b.hi;
  Rational p3 = a.hi * b.lo;
  Rational p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

// Sign of an integer polynomial at n/d with d > 0.
int isign_at(const IPoly& p, const Integer& n, const Integer& d) {
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer dpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    dpow *= d;
    acc *= n;
    acc += p[i] * dpow;
  }
  return sgn(acc);
}

void divide_by_abs_content(IPoly& p) {
  detail::itrim(p);
  if (p.empty()) return;
  Integer g = detail::icontent(p);
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

RationalInterval evaluate(const UPoly& p, const RationalInterval& box) {
  if (box.lo == box.hi) {
    Rational v = p(box.lo);
    return {v, v};
  }
  if (p.is_zero()) return {0, 0};
  // Integer Horner: p = P / pd, box = [a, b] / d; the accumulator after k
  // steps carries the denominator d^k.
  Integer pd = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(pd.get_mpz_t(), pd.get_mpz_t(), c.get_den_mpz_t());
  Integer d;
  mpz_lcm(d.get_mpz_t(), box.lo.get_den_mpz_t(), box.hi.get_den_mpz_t());
  const Integer a = box.lo.get_num() * (d / box.lo.get_den());
  const Integer b = box.hi.get_num() * (d / box.hi.get_den());
  const auto& c = p.coeffs();
  auto coeff = [&](std::size_t i) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), pd.get_mpz_t(), c[i].get_den_mpz_t());
    return Integer(c[i].get_num() * q);
  };
  Integer lo = coeff(c.size() - 1);
  Integer hi = lo;
  Integer dpow = 1;
  Integer p1, p2, p3, p4;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dpow *= d;
    mpz_mul(p1.get_mpz_t(), lo.get_mpz_t(), a.get_mpz_t());
    mpz_mul(p2.get_mpz_t(), lo.get_mpz_t(), b.get_mpz_t());
    mpz_mul(p3.get_mpz_t(), hi.get_mpz_t(), a.get_mpz_t());
    mpz_mul(p4.get_mpz_t(), hi.get_mpz_t(), b.get_mpz_t());
    const Integer ci = coeff(i) * dpow;
    lo = std::min({p1, p2, p3, p4}) + ci;
    hi = std::max({p1, p2, p3, p4}) + ci;
  }
  const Integer scale = pd * dpow;
  Rational rlo(lo, scale);
  Rational rhi(hi, scale);
  rlo.canonicalize();
  rhi.canonicalize();
  return {rlo, rhi};
}

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidInput, "Sturm sequence of the zero polynomial");
  IPoly a = detail::to_primitive_ipoly(p);
  chain_.push_back(a);
  if (detail::ideg(a) == 0) return;
  IPoly b = detail::to_primitive_ipoly(p.derivative());
  while (!b.empty()) {
    chain_.push_back(b);
    if (detail::ideg(b) == 0) break;
    const int delta = detail::ideg(a) - detail::ideg(b);
    IPoly r = detail::pseudo_remainder(a, b);
    // prem = lc(b)^(delta+1) * rem; keep the sign of -rem.
    const bool flip = sgn(b.back()) < 0 && (delta + 1) % 2 == 1;
    if (!flip) {
      for (auto& c : r) c = -c;
    }
    divide_by_abs_content(r);
    a = std::move(b);
    b = std::move(r);
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = isign_at(p, x.get_num(), x.get_den());
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.back());
    if (!positive && detail::ideg(p) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_real_roots() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

AlgebraicNumber::AlgebraicNumber(UPoly defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (defining_.is_zero() || defining_.degree() < 1) {
    throw Error(ErrorKind::InvalidInput, "algebraic number needs a nonconstant defining polynomial");
  }
  if (!is_squarefree(defining_)) {
    throw Error(ErrorKind::InvalidInput, "defining polynomial is not square-free", to_string(defining_));
  }
  if (lo_ > hi_) throw Error(ErrorKind::InvalidInput, "empty isolating interval");
  if (lo_ == hi_) {
    if (defining_(lo_) != 0) throw Error(ErrorKind::InvalidInput, "exact value is not a root");
    return;
  }
  if (defining_(lo_) == 0 || defining_(hi_) == 0) {
    throw Error(ErrorKind::InvalidInput, "isolating interval endpoint is a root");
  }
  if (SturmSequence(defining_).count_roots(lo_, hi_) != 1) {
    throw Error(ErrorKind::InvalidInput, "interval does not isolate exactly one root", to_string(defining_));
  }
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& value) {
  return trusted(UPoly{-value, Rational(1)}, value, value);
}

AlgebraicNumber AlgebraicNumber::trusted(UPoly defining, Rational lo, Rational hi) {
  AlgebraicNumber a;
  a.defining_ = std::move(defining);
  a.lo_ = std::move(lo);
  a.hi_ = std::move(hi);
  return a;
}

AlgebraicNumber AlgebraicNumber::bisected() const {
  if (is_exact()) return *this;
  Rational mid = (lo_ + hi_) / 2;
  const int sm = sign_at(defining_, mid);
  if (sm == 0) return trusted(defining_, mid, mid);
  if (sm == sign_at(defining_, lo_)) return trusted(defining_, mid, hi_);
  return trusted(defining_, lo_, mid);
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& max_width) const {
  AlgebraicNumber a = *this;
  while (a.hi_ - a.lo_ > max_width) a = a.bisected();
  return a;
}

double AlgebraicNumber::approx() const {
  AlgebraicNumber a = refined(power_of_two(-40));
  return Rational((a.lo_ + a.hi_) / 2).get_d();
}

std::vector<AlgebraicNumber> isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidInput, "root isolation of the zero polynomial");
  if (!is_squarefree(p)) throw Error(ErrorKind::InvalidInput, "root isolation needs a square-free polynomial", to_string(p));
  std::vector<AlgebraicNumber> out;
  if (p.degree() < 1) return out;
  const UPoly q = primitive_part(p);
  const SturmSequence sturm(q);
  // Cauchy bound: every root satisfies |x| < 1 + max |a_i / a_n|.
  Rational m = 0;
  for (int i = 0; i < q.degree(); ++i) m = std::max(m, Rational(abs(q.coeff(i) / q.leading())));
  const Rational bound = power_of_two(ceil_log2(m + 1) + 1);

  struct Box {
    Rational lo;
    Rational hi;
    int count;
  };
  std::vector<Box> stack;
  stack.push_back({-bound, bound, sturm.count_roots(-bound, bound)});
  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    if (b.count == 0) continue;
    if (b.count == 1) {
      out.push_back(AlgebraicNumber::trusted(q, b.lo, b.hi));
      continue;
    }
    // Split at a non-root point; the dyadic midpoint almost always works.
    Rational split = (b.lo + b.hi) / 2;
    const int n = q.degree() + 2;
    for (int k = 1; q(split) == 0 && k < n; ++k) split = b.lo + (b.hi - b.lo) * k / n;
    const int left = sturm.count_roots(b.lo, split);
    // Push right first so that the left half is processed first.
    stack.push_back({split, b.hi, b.count - left});
    stack.push_back({b.lo, split, left});
  }
  // Collapse intervals around rational roots of low-degree factors.
  for (auto& a : out) {
    for (int step = 0; step < 4 && !a.is_exact(); ++step) a = a.bisected();
  }
  return out;
}

int certified_sign(const UPoly& p, const AlgebraicNumber& at) {
  if (at.is_exact()) return sign_at(p, at.lo());
  const UPoly r = remainder(p, at.defining());
  if (r.is_zero()) return 0;
  if (r.degree() == 0) return sign(r.leading());
  if (!coprime(r, at.defining())) {
    const UPoly g = gcd(r, at.defining());
    if (SturmSequence(g).count_roots(at.lo(), at.hi()) > 0) return 0;
  }
  AlgebraicNumber a = at;
  while (true) {
    if (a.is_exact()) return sign_at(r, a.lo());
    const RationalInterval e = evaluate(r, a.interval());
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    a = a.bisected();
  }
}

AlgebraicPoint::AlgebraicPoint(AlgebraicNumber theta, std::vector<UPoly> numerators, UPoly denominator)
    : theta_(std::move(theta)), numerators_(std::move(numerators)), denominator_(std::move(denominator)) {
  const UPoly& q = theta_.defining();
  for (auto& n : numerators_) n = remainder(n, q);
  denominator_ = remainder(denominator_, q);
  den_sign_ = certified_sign(denominator_, theta_);
  if (den_sign_ == 0) throw Error(ErrorKind::InvalidInput, "denominator vanishes at the point");
}

AlgebraicPoint AlgebraicPoint::from_rationals(std::span<const Rational> coords) {
  std::vector<UPoly> nums;
  for (const auto& c : coords) nums.push_back(UPoly::constant(c));
  return AlgebraicPoint(AlgebraicNumber::rational(0), std::move(nums), UPoly::constant(1));
}

AlgebraicPoint AlgebraicPoint::from_numbers(std::span<const AlgebraicNumber> coords) {
  const AlgebraicNumber* irrational = nullptr;
  for (const auto& c : coords) {
    if (c.is_exact()) continue;
    if (irrational != nullptr) {
      throw Error(ErrorKind::InvalidInput, "independent irrational coordinates need a triangular system");
    }
    irrational = &c;
  }
  const AlgebraicNumber theta = irrational ? *irrational : AlgebraicNumber::rational(0);
  std::vector<UPoly> nums;
  for (const auto& c : coords) nums.push_back(c.is_exact() ? UPoly::constant(c.lo()) : UPoly::variable());
  return AlgebraicPoint(theta, std::move(nums), UPoly::constant(1));
}

RationalInterval AlgebraicPoint::enclosure(std::size_t coord, const Rational& max_width) const {
  AlgebraicNumber t = theta_;
  while (true) {
    const RationalInterval num = evaluate(numerators_.at(coord), t.interval());
    const RationalInterval den = evaluate(denominator_, t.interval());
    if (!den.contains_zero()) {
      const Rational inv_lo = 1 / den.hi;
      const Rational inv_hi = 1 / den.lo;
      const RationalInterval q = mul(num, {std::min(inv_lo, inv_hi), std::max(inv_lo, inv_hi)});
      if (q.width() <= max_width) return q;
    }
    t = t.bisected();
  }
}

double AlgebraicPoint::approx(std::size_t coord) const {
  const RationalInterval e = enclosure(coord, power_of_two(-40));
  return Rational((e.lo + e.hi) / 2).get_d();
}

namespace {

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& q) { return remainder(a * b, q); }

std::vector<UPoly> powers_mod(const UPoly& base, int count, const UPoly& q) {
  std::vector<UPoly> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  out.push_back(remainder(UPoly::constant(1), q));
  for (int i = 1; i <= count; ++i) out.push_back(mulmod(out.back(), base, q));
  return out;
}

}  // namespace

UPoly substitute_mod(const BPoly& p, const UPoly& xn, const UPoly& yn, const UPoly& den, const UPoly& modulus) {
  const UPoly& q = modulus;
  const int m = std::max(p.total_degree(), 0);
  const auto xp = powers_mod(xn, std::max(p.degree_x(), 0), q);
  const auto yp = powers_mod(yn, std::max(p.degree_y(), 0), q);
  const auto dp = powers_mod(den, m, q);
  UPoly acc;
  for (int i = 0; i <= p.degree_x(); ++i) {
    const UPoly& row = p.rows()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= row.degree(); ++j) {
      const Rational& c = row.coeffs()[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      UPoly term = mulmod(xp[static_cast<std::size_t>(i)], yp[static_cast<std::size_t>(j)], q);
      term = mulmod(term, dp[static_cast<std::size_t>(m - i - j)], q);
      acc += term * c;
    }
  }
  return acc;
}

UPoly numerator_at(const BPoly& p, const AlgebraicPoint& at) {
  if (at.dimension() < 2) throw Error(ErrorKind::InvalidInput, "bivariate evaluation needs a 2-dimensional point");
  return substitute_mod(p, at.numerators()[0], at.numerators()[1], at.denominator(), at.theta().defining());
}

int certified_sign(const BPoly& p, const AlgebraicPoint& at) {
  const int m = std::max(p.total_degree(), 0);
  const int s = certified_sign(numerator_at(p, at), at.theta());
  return (m % 2 == 1 && at.denominator_sign() < 0) ? -s : s;
}

bool vanishes_at(const BPoly& p, const AlgebraicPoint& at) { return certified_sign(numerator_at(p, at), at.theta()) == 0; }

std::string to_string(const AlgebraicNumber& a) {
  std::ostringstream out;
  out << "root of " << to_string(a.defining()) << " in [" << a.lo().get_str() << ", " << a.hi().get_str() << "]";
  return out.str();
}

}  // namespace ewrithe
