#pragma once

#include "qbern/dense_poly.hpp"

namespace qbern {

// Polynomial in the indeterminate X over Q(q).
class XPoly : public DensePoly<XPoly> {
 public:
  using DensePoly<XPoly>::DensePoly;
  static constexpr const char* variable = "X";
};

// D_q: (P(qX) - P(X)) / ((q-1) X); on monomials X^k -> [k]_q X^{k-1}.
XPoly q_derivative(const XPoly& p);

// The unique polynomial F with D_q F = p and F(0) = 0; X^k -> X^{k+1}/[k+1]_q.
XPoly q_antiderivative(const XPoly& p);

// Jackson integral with polynomial bounds, via the fundamental theorem of
// q-calculus: F(b(X)) - F(a(X)) with F the q-antiderivative of p.
XPoly jackson_integral(const XPoly& p, const XPoly& a, const XPoly& b);

// d/dX and its antiderivative vanishing at 0
XPoly classical_derivative(const XPoly& p);
XPoly classical_antiderivative(const XPoly& p);

// composition P(s(X)) by Horner over XPoly
XPoly substitute(const XPoly& p, const XPoly& s);

}  // namespace qbern
