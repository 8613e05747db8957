#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qbern/rational.hpp"

namespace qbern {

class QPoly;
struct QPolyDivMod;

// Dense polynomial in the indeterminate q with rational coefficients,
// little-endian (index i holds the coefficient of q^i).  Canonical trim:
// no trailing zero coefficients, the zero polynomial is the empty sequence.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
  QPoly(int c) : QPoly(Rational(c)) {}
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  QPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static QPoly monomial(int deg, const Rational& coeff = Rational(1));

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<Rational>& coefficients() const { return c_; }
  // coefficient of q^k, zero beyond the degree
  const Rational& coeff(int k) const;
  const Rational& leading() const;

  Rational eval(const Rational& q0) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const Rational& s);
  friend QPoly operator*(const Rational& s, const QPoly& a) { return a * s; }
  friend QPoly operator-(const QPoly& a);

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  // content: positive rational c such that p / c has coprime integer
  // coefficients; content of the zero polynomial is 0
  Rational content() const;
  // p scaled to integer coprime coefficients, leading sign preserved
  QPoly primitive_part() const;
  // primitive with positive leading coefficient (the canonical unit normal)
  QPoly unit_normal() const;

  std::string str(const std::string& var = "q") const;

 private:
  friend QPolyDivMod divmod(const QPoly& a, const QPoly& b);

  void trim();
  std::vector<Rational> c_;
};

struct QPolyDivMod {
  QPoly quot;
  QPoly rem;
};
// polynomial long division over the rational field; b must be nonzero
QPolyDivMod divmod(const QPoly& a, const QPoly& b);
// division known to be exact; throws ContradictionError on a remainder
QPoly div_exact(const QPoly& a, const QPoly& b);

// GCD in Q[q], returned in unit-normal form (primitive integer coefficients,
// positive leading coefficient).  Euclidean remainder sequence with content
// extraction after every step.  gcd(p, 0) = unit normal of p; gcd(0, 0) is a
// domain error.
QPoly gcd(const QPoly& a, const QPoly& b);

}  // namespace qbern
