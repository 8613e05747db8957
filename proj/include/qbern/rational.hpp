#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "qbern/errors.hpp"

namespace qbern {

// Arbitrary-precision rational number in canonical form: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero is 0/1.  Thin value wrapper over
// GMP's mpq_class, which maintains exactly this form.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const mpz_class& n) : v_(n) {}
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "a", "a/b", and plain decimals like "0.5" or "-2.25".
  static Rational from_string(std::string_view s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(unsigned e) const;
  double to_double() const { return v_.get_d(); }

  // Human form: "3", "-1/2".
  std::string str() const;
  // Wire form with explicit denominator: "3/1", "-1/2", "0/1".
  std::string fraction_str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// Binomial coefficient by the Pascal recurrence over big integers.
mpz_class binomial(int n, int k);

}  // namespace qbern
