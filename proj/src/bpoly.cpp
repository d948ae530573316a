#include "ewrithe/bpoly.h"

#include <algorithm>
#include <sstream>

namespace ewrithe {

BPoly::BPoly(std::vector<UPoly> rows) : rows_(std::move(rows)) { trim(); }

void BPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BPoly BPoly::constant(const Rational& c) { return BPoly({UPoly::constant(c)}); }
BPoly BPoly::x() { return monomial(1, 1, 0); }
BPoly BPoly::y() { return monomial(1, 0, 1); }
BPoly BPoly::in_y(const UPoly& p) { return BPoly({p}); }

BPoly BPoly::in_x(const UPoly& p) {
  std::vector<UPoly> rows;
  rows.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) rows.push_back(UPoly::constant(c));
  return BPoly(std::move(rows));
}

BPoly BPoly::monomial(const Rational& c, int dx, int dy) {
  std::vector<UPoly> rows(static_cast<std::size_t>(dx) + 1);
  rows.back() = UPoly::monomial(c, dy);
  return BPoly(std::move(rows));
}

int BPoly::degree_y() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

int BPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].is_zero()) d = std::max(d, static_cast<int>(i) + rows_[i].degree());
  }
  return d;
}

Rational BPoly::coeff(int dx, int dy) const {
  if (dx < 0 || dx > degree_x()) return 0;
  return rows_[static_cast<std::size_t>(dx)].coeff(dy);
}

UPoly BPoly::at_x(const Rational& x0) const {
  UPoly acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

UPoly BPoly::at_y(const Rational& y0) const {
  std::vector<Rational> c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i](y0);
  return UPoly(std::move(c));
}

Rational BPoly::operator()(const Rational& x0, const Rational& y0) const { return at_y(y0)(x0); }

BPoly BPoly::swapped() const {
  const int dy = degree_y();
  if (dy < 0) return {};
  std::vector<std::vector<Rational>> cols(static_cast<std::size_t>(dy) + 1,
                                          std::vector<Rational>(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& rc = rows_[i].coeffs();
    for (std::size_t j = 0; j < rc.size(); ++j) cols[j][i] = rc[j];
  }
  std::vector<UPoly> rows;
  rows.reserve(cols.size());
  for (auto& c : cols) rows.emplace_back(std::move(c));
  return BPoly(std::move(rows));
}

BPoly BPoly::dx() const {
  if (rows_.size() <= 1) return {};
  std::vector<UPoly> out(rows_.size() - 1);
  for (std::size_t i = 1; i < rows_.size(); ++i) out[i - 1] = rows_[i] * Rational(static_cast<long>(i));
  return BPoly(std::move(out));
}

BPoly BPoly::dy() const {
  std::vector<UPoly> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = rows_[i].derivative();
  return BPoly(std::move(out));
}

BPoly BPoly::sheared(const Rational& shift) const {
  if (shift == 0) return *this;
  // y -> w - shift*x, built by Horner in y over (x, w).
  const BPoly lin = BPoly::y() - BPoly::x() * shift;
  const BPoly me = swapped();  // polynomial in y with coefficients in x
  BPoly acc;
  for (auto it = me.rows_.rbegin(); it != me.rows_.rend(); ++it) {
    acc = acc * lin;
    acc += BPoly::in_x(*it);
  }
  return acc;
}

BPoly& BPoly::operator+=(const BPoly& other) {
  if (other.rows_.size() > rows_.size()) rows_.resize(other.rows_.size());
  for (std::size_t i = 0; i < other.rows_.size(); ++i) rows_[i] += other.rows_[i];
  trim();
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& other) {
  if (other.rows_.size() > rows_.size()) rows_.resize(other.rows_.size());
  for (std::size_t i = 0; i < other.rows_.size(); ++i) rows_[i] -= other.rows_[i];
  trim();
  return *this;
}

BPoly& BPoly::operator*=(const Rational& c) {
  for (auto& r : rows_) r *= c;
  trim();
  return *this;
}

BPoly operator-(const BPoly& a) {
  BPoly r = a;
  r *= Rational(-1);
  return r;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> out(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) {
      if (b.rows_[j].is_zero()) continue;
      out[i + j] += a.rows_[i] * b.rows_[j];
    }
  }
  return BPoly(std::move(out));
}

BPoly compose(const UPoly& p, const BPoly& arg) {
  BPoly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * arg;
    acc += BPoly::constant(*it);
  }
  return acc;
}

std::string to_string(const BPoly& p, const std::string& xname, const std::string& yname) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree_x(); i >= 0; --i) {
    const UPoly& row = p.rows()[static_cast<std::size_t>(i)];
    for (int j = row.degree(); j >= 0; --j) {
      Rational c = row.coeff(j);
      if (c == 0) continue;
      const bool negative = c < 0;
      if (negative) c = -c;
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      bool need_star = false;
      if (c != 1 || (i == 0 && j == 0)) {
        out << c.get_str();
        need_star = true;
      }
      if (i > 0) {
        out << (need_star ? "*" : "") << xname;
        if (i > 1) out << '^' << i;
        need_star = true;
      }
      if (j > 0) {
        out << (need_star ? "*" : "") << yname;
        if (j > 1) out << '^' << j;
      }
    }
  }
  return out.str();
}

}  // namespace ewrithe
