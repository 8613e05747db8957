#include "qbern/qrat.hpp"

#include <utility>
#include <vector>

namespace qbern {

namespace {

// scales (num, den) by the unique positive rational that makes den a
// primitive integer polynomial, then fixes den's leading sign
void scale_to_unit_normal_den(QPoly& num, QPoly& den) {
  Rational f = den.content();
  if (den.leading().sign() < 0) f = -f;
  const Rational inv = f.reciprocal();
  num = num * inv;
  den = den * inv;
}

}  // namespace

QRat QRat::canonicalized(QPoly num, QPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) return QRat();
  QPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = div_exact(num, g);
    den = div_exact(den, g);
  }
  scale_to_unit_normal_den(num, den);
  return QRat(std::move(num), std::move(den), raw_tag{});
}

QRat::QRat(const QPoly& num, const QPoly& den) { *this = canonicalized(num, den); }

Rational QRat::constant_value() const {
  if (!is_constant()) throw DomainError("QRat is not a constant");
  return num_.coeff(0);
}

QRat QRat::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of the zero rational function");
  QPoly n = den_;
  QPoly d = num_;
  scale_to_unit_normal_den(n, d);  // num_ and den_ are already coprime
  return QRat(std::move(n), std::move(d), raw_tag{});
}

QRat QRat::pow(unsigned e) const {
  QRat acc(1);
  QRat base = *this;
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

Rational QRat::eval(const Rational& q0) const {
  const Rational d = den_.eval(q0);
  if (d.is_zero())
    throw PoleError("rational function has a pole at q = " + q0.str(), q0.fraction_str());
  return num_.eval(q0) / d;
}

Rational QRat::limit_at_1() const { return eval(Rational(1)); }

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const QPoly g1 = gcd(den_, o.den_);
  if (g1.is_one()) {
    QPoly n = num_ * o.den_ + o.num_ * den_;
    if (n.is_zero()) return *this = QRat();
    // coprime numerator and a product of unit-normal denominators
    return *this = QRat(std::move(n), den_ * o.den_, raw_tag{});
  }
  const QPoly da = div_exact(den_, g1);
  const QPoly db = div_exact(o.den_, g1);
  QPoly t = num_ * db + o.num_ * da;
  if (t.is_zero()) return *this = QRat();
  const QPoly g2 = gcd(t, g1);
  if (g2.is_one()) return *this = QRat(std::move(t), da * o.den_, raw_tag{});
  QPoly n = div_exact(t, g2);
  QPoly d = da * div_exact(o.den_, g2);
  return *this = QRat(std::move(n), std::move(d), raw_tag{});
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_zero()) return *this = QRat();
  const QPoly g1 = gcd(num_, o.den_);
  const QPoly g2 = gcd(o.num_, den_);
  QPoly n = (g1.is_one() ? num_ : div_exact(num_, g1)) *
            (g2.is_one() ? o.num_ : div_exact(o.num_, g2));
  // quotients of unit-normal polynomials by unit-normal divisors stay
  // integer-primitive (Gauss), so the product denominator is unit-normal
  QPoly d = (g2.is_one() ? den_ : div_exact(den_, g2)) *
            (g1.is_one() ? o.den_ : div_exact(o.den_, g1));
  return *this = QRat(std::move(n), std::move(d), raw_tag{});
}

QRat& QRat::operator/=(const QRat& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  return *this *= o.reciprocal();
}

QRat operator-(const QRat& a) {
  QRat r = a;
  r.num_ = -r.num_;
  return r;
}

bool QRat::is_canonical() const {
  if (den_.is_zero()) return false;
  if (num_.is_zero()) return den_.is_one();
  if (den_.leading().sign() <= 0) return false;
  if (!den_.content().is_one()) return false;
  return gcd(num_, den_).is_one();
}

std::string QRat::str() const {
  if (is_polynomial()) return num_.str();
  const bool num_simple = num_.coefficients().size() == 1;
  std::string n = num_simple ? num_.str() : "(" + num_.str() + ")";
  return n + "/(" + den_.str() + ")";
}

QRat bracket(int n) {
  if (n < 0) throw UsageError("bracket(n) requires n >= 0");
  std::vector<Rational> c(static_cast<size_t>(n), Rational(1));
  return QRat(QPoly(std::move(c)));
}

}  // namespace qbern
