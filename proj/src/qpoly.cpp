#include "qbern/qpoly.hpp"

#include <sstream>
#include <utility>

namespace qbern {

namespace {
const Rational kZero(0);
}

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly QPoly::monomial(int deg, const Rational& coeff) {
  if (deg < 0) throw UsageError("monomial degree must be nonnegative");
  if (coeff.is_zero()) return QPoly();
  QPoly p;
  p.c_.assign(static_cast<size_t>(deg) + 1, kZero);
  p.c_.back() = coeff;
  return p;
}

const Rational& QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

const Rational& QPoly::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational QPoly::eval(const Rational& q0) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  QPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

QPoly operator*(const QPoly& a, const Rational& s) {
  if (s.is_zero()) return QPoly();
  QPoly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

QPoly operator-(const QPoly& a) {
  QPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPolyDivMod divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  QPolyDivMod out;
  out.rem = a;
  if (a.degree() < b.degree()) return out;
  out.quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, kZero);
  const Rational lead_inv = b.leading().reciprocal();
  while (!out.rem.is_zero() && out.rem.degree() >= b.degree()) {
    const int shift = out.rem.degree() - b.degree();
    const Rational f = out.rem.leading() * lead_inv;
    out.quot.c_[static_cast<size_t>(shift)] = f;
    // rem -= f * q^shift * b
    for (size_t i = 0; i < b.c_.size(); ++i)
      out.rem.c_[static_cast<size_t>(shift) + i] -= f * b.c_[i];
    out.rem.trim();
  }
  out.quot.trim();
  return out;
}

QPoly div_exact(const QPoly& a, const QPoly& b) {
  QPolyDivMod dm = divmod(a, b);
  if (!dm.rem.is_zero())
    throw ContradictionError("exact polynomial division left a remainder");
  return dm.quot;
}

Rational QPoly::content() const {
  if (is_zero()) return Rational(0);
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    mpz_class n = c.numerator(), d = c.denominator();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  return Rational(num_gcd, den_lcm);  // gcd is taken on |numerators|, so > 0
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return QPoly();
  return *this * content().reciprocal();
}

QPoly QPoly::unit_normal() const {
  if (is_zero()) return QPoly();
  QPoly p = primitive_part();
  if (p.leading().sign() < 0) p = -p;
  return p;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  if (a.is_zero()) return b.unit_normal();
  if (b.is_zero()) return a.unit_normal();
  QPoly u = a.unit_normal();
  QPoly v = b.unit_normal();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    QPoly r = divmod(u, v).rem;
    u = std::move(v);
    // re-extracting content each step keeps the integer cores small
    v = r.is_zero() ? QPoly() : r.unit_normal();
  }
  return u;
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        mag = -c;
      }
      first = false;
    } else if (c.sign() < 0) {
      os << " - ";
      mag = -c;
    } else {
      os << " + ";
    }
    const bool unit = mag.is_one();
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace qbern
