#pragma once

#include <initializer_list>
#include <vector>

#include "qbern/qrat.hpp"

namespace qbern {

// Dense little-endian polynomial over Q(q), shared mechanics for the two
// polynomial spaces (in X and in Y = q^X).  Distinct derived types keep the
// spaces from mixing accidentally; degrees stay small, so dense is right.
template <class D>
class DensePoly {
 public:
  DensePoly() = default;
  DensePoly(const QRat& c) { if (!c.is_zero()) c_.push_back(c); }
  DensePoly(int c) : DensePoly(QRat(c)) {}
  explicit DensePoly(std::vector<QRat> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<QRat> coeffs) : c_(coeffs) { trim(); }

  static D monomial(int deg, const QRat& coeff = QRat(1)) {
    if (deg < 0) throw UsageError("monomial degree must be nonnegative");
    D p;
    if (coeff.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, QRat());
    p.c_.back() = coeff;
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<QRat>& coefficients() const { return c_; }
  const QRat& coeff(int k) const {
    static const QRat zero;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
  }

  // Horner evaluation at a Q(q) point
  QRat eval(const QRat& at) const {
    QRat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  D& operator+=(const D& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), QRat());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return self();
  }
  D& operator-=(const D& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), QRat());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return self();
  }
  D& operator*=(const QRat& s) {
    if (s.is_zero()) {
      c_.clear();
      return self();
    }
    for (auto& c : c_) c *= s;
    return self();
  }

  friend D operator+(D a, const D& b) { return a += b; }
  friend D operator-(D a, const D& b) { return a -= b; }
  friend D operator*(D a, const QRat& s) { return a *= s; }
  friend D operator*(const QRat& s, D a) { return a *= s; }
  friend D operator-(const D& a) {
    D r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend D operator*(const D& a, const D& b) {
    D r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, QRat());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  D pow(unsigned e) const {
    D acc(1);
    D base = self_const();
    while (e > 0) {
      if (e & 1u) acc = acc * base;
      base = base * base;
      e >>= 1u;
    }
    return acc;
  }

  friend bool operator==(const D& a, const D& b) { return a.c_ == b.c_; }

 protected:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  D& self() { return static_cast<D&>(*this); }
  const D& self_const() const { return static_cast<const D&>(*this); }

  std::vector<QRat> c_;
};

}  // namespace qbern
