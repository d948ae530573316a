#include "ewrithe/upoly.h"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "ewrithe/detail/ipoly.h"
#include "ewrithe/error.h"

namespace ewrithe {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::variable() { return monomial(1, 1); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

GaussianRational UPoly::operator()(const GaussianRational& x) const {
  GaussianRational acc{0, 0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x;
    acc.re += *it;
  }
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::shifted(const Rational& shift) const {
  // Horner in the shifted variable.
  UPoly acc;
  const UPoly lin{shift, Rational(1)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += constant(*it);
  }
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly r = *this;
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly operator-(const UPoly& a) {
  UPoly r = a;
  r *= Rational(-1);
  return r;
}

namespace {

// p = ints / den with ints integral.
Integer common_denominator(const std::vector<Rational>& c) {
  Integer d = 1;
  for (const auto& x : c) {
    if (x.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  }
  return d;
}

std::vector<Integer> scaled(const std::vector<Rational>& c, const Integer& d) {
  std::vector<Integer> out(c.size());
  Integer q;
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), c[i].get_den_mpz_t());
    mpz_mul(out[i].get_mpz_t(), c[i].get_num_mpz_t(), q.get_mpz_t());
  }
  return out;
}

std::vector<Rational> unscaled(const std::vector<Integer>& c, const Integer& d) {
  std::vector<Rational> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_set(out[i].get_num_mpz_t(), c[i].get_mpz_t());
    mpz_set(out[i].get_den_mpz_t(), d.get_mpz_t());
    out[i].canonicalize();
  }
  return out;
}

}  // namespace

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Integer da = common_denominator(a.coeffs_);
  const Integer db = common_denominator(b.coeffs_);
  const auto ia = scaled(a.coeffs_, da);
  const auto ib = scaled(b.coeffs_, db);
  std::vector<Integer> out(ia.size() + ib.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
  }
  return UPoly(unscaled(out, da * db));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv = 1 / b.leading();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  Rational tmp;
  for (int i = a.degree(); i >= db; --i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (r[ui] == 0) continue;
    Rational factor = r[ui] * inv;
    q[ui - static_cast<std::size_t>(db)] = factor;
    for (int j = 0; j <= db; ++j) {
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), bc[static_cast<std::size_t>(j)].get_mpq_t());
      r[ui - static_cast<std::size_t>(db) + static_cast<std::size_t>(j)] -= tmp;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  if (b.degree() == 0) return {};
  // Integer pseudo-division: lb^k * A = Q * B + R.
  Integer den = common_denominator(a.coeffs());
  std::vector<Integer> r = scaled(a.coeffs(), den);
  const detail::IPoly ib = detail::to_primitive_ipoly(b);
  const int db = detail::ideg(ib);
  const Integer& lb = ib.back();
  Integer tmp;
  while (detail::ideg(r) >= db && !r.empty()) {
    const Integer lead = r.back();
    const std::size_t off = r.size() - ib.size();
    if (lb != 1) {
      for (auto& c : r) c *= lb;
      den *= lb;
    }
    for (std::size_t j = 0; j < ib.size(); ++j) {
      mpz_mul(tmp.get_mpz_t(), lead.get_mpz_t(), ib[j].get_mpz_t());
      r[off + j] -= tmp;
    }
    detail::itrim(r);
  }
  if (r.empty()) return {};
  // Keep the numbers small: divide out the common content.
  Integer g = den;
  for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1) {
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  return UPoly(unscaled(r, den));
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidInput, "inexact polynomial division");
  return q;
}

UPoly primitive_part(const UPoly& p) { return detail::to_upoly(detail::to_primitive_ipoly(p)); }

UPoly gcd(const UPoly& a, const UPoly& b) {
  using namespace detail;
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IPoly x = to_primitive_ipoly(a);
  IPoly y = to_primitive_ipoly(b);
  if (ideg(x) == 0 || ideg(y) == 0) return UPoly::constant(1);
  if (ideg(x) < ideg(y)) std::swap(x, y);
  if (modular_gcd_degree(x, y) == 0) return UPoly::constant(1);
  while (!y.empty()) {
    IPoly r = pseudo_remainder(std::move(x), y);
    x = std::move(y);
    make_primitive(r);
    y = std::move(r);
  }
  make_primitive(x);
  return to_upoly(x);
}

bool coprime(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.degree() == 0 || b.degree() == 0;
  if (a.degree() == 0 || b.degree() == 0) return true;
  using namespace detail;
  IPoly x = to_primitive_ipoly(a);
  IPoly y = to_primitive_ipoly(b);
  if (modular_gcd_degree(x, y) == 0) return true;
  return gcd(a, b).degree() == 0;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidInput, "square-free part of the zero polynomial");
  if (p.degree() == 0) return UPoly::constant(1);
  UPoly g = gcd(p, p.derivative());
  return primitive_part(exact_quotient(p, g));
}

bool is_squarefree(const UPoly& p) {
  if (p.is_zero()) return false;
  return coprime(p, p.derivative());
}

int sign_at(const UPoly& p, const Rational& x) { return sgn(p(x)); }

UPoly from_roots(std::span<const Rational> roots) {
  UPoly r = UPoly::constant(1);
  for (const auto& x : roots) r = r * UPoly{-x, Rational(1)};
  return r;
}

std::string to_string(const UPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

namespace detail {

int ideg(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer icontent(const IPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IPoly& p) {
  itrim(p);
  if (p.empty()) return;
  Integer g = icontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

IPoly to_primitive_ipoly(const UPoly& p) {
  if (p.is_zero()) return {};
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IPoly out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    Integer q;
    mpz_divexact(q.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    out[i] = c.get_num() * q;
  }
  make_primitive(out);
  return out;
}

UPoly to_upoly(const IPoly& p) {
  std::vector<Rational> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = Rational(p[i]);
  return UPoly(std::move(v));
}

IPoly pseudo_remainder(IPoly a, const IPoly& b) {
  const int db = ideg(b);
  const Integer& lb = b.back();
  Integer tmp;
  int steps = ideg(a) - db + 1;
  while (ideg(a) >= db && !a.empty()) {
    --steps;
    const int da = ideg(a);
    const Integer lead = a.back();
    const std::size_t off = static_cast<std::size_t>(da - db);
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_mul(tmp.get_mpz_t(), lead.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
      a[off + static_cast<std::size_t>(j)] -= tmp;
    }
    itrim(a);
  }
  for (; steps > 0; --steps) {
    for (auto& c : a) c *= lb;
  }
  return a;
}

namespace {

using u64 = std::uint64_t;

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce_mod(const IPoly& p, u64 m) {
  std::vector<u64> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = mpz_fdiv_ui(p[i].get_mpz_t(), m);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 m) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), m - 2, m);
    while (a.size() >= b.size() && !a.empty()) {
      const u64 f = a.back() * inv % m;
      const std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[off + j] = (a[off + j] + m - f * b[j] % m) % m;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

int modular_gcd_degree(const IPoly& a, const IPoly& b) {
  static constexpr u64 primes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL};
  int best = -2;
  for (u64 m : primes) {
    if (mpz_fdiv_ui(a.back().get_mpz_t(), m) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), m) == 0) continue;
    const int d = gcd_degree_mod(reduce_mod(a, m), reduce_mod(b, m), m);
    if (d == 0) return 0;
    best = best < 0 ? d : std::min(best, d);
    if (best >= 0) break;
  }
  return best;
}

}  // namespace detail

}  // namespace ewrithe
