#pragma once

#include <string>

#include "qbern/qpoly.hpp"

namespace qbern {

// Element of Q(q): reduced fraction of polynomials in q.  Canonical form:
// gcd(num, den) = 1, den has coprime integer coefficients with positive
// leading coefficient, zero is 0/1.  Every operation returns canonical
// values, so equality is componentwise structural comparison.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(int c) : num_(c), den_(1) {}
  QRat(const Rational& c) : num_(c), den_(1) {}
  QRat(const QPoly& p) : num_(p), den_(1) {}
  QRat(const QPoly& num, const QPoly& den);  // canonicalizes; den = 0 is a domain error

  // the monomial q^k
  static QRat q_power(int k) { return QRat(QPoly::monomial(k)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  // value of a constant QRat as a Rational
  Rational constant_value() const;

  QRat reciprocal() const;
  QRat pow(unsigned e) const;

  // Exact value at q = q0; PoleError if the reduced denominator vanishes.
  Rational eval(const Rational& q0) const;
  // Evaluation at q = 1 for values known to be regular there; an irreducible
  // pole at 1 is an error, never an approximation.
  Rational limit_at_1() const;

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend QRat operator-(const QRat& a);

  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // true iff the representation satisfies every canonical-form invariant
  bool is_canonical() const;

  std::string str() const;

 private:
  struct raw_tag {};
  QRat(QPoly num, QPoly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
  static QRat canonicalized(QPoly num, QPoly den);

  QPoly num_;
  QPoly den_;
};

// The q-bracket [n]_q = 1 + q + ... + q^{n-1}; bracket(0) = 0.
QRat bracket(int n);

}  // namespace qbern
