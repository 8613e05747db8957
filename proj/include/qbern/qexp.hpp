#pragma once

#include "qbern/dense_poly.hpp"
#include "qbern/xpoly.hpp"

namespace qbern {

// q-polynomial: polynomial in Y = q^X over Q(q).  [X]_q is representable as
// (Y - 1)/(q - 1), and the mixed basis q^{kX} [X]_q^{n-k} as
// Y^k ((Y - 1)/(q - 1))^{n-k}.
class QExpPoly : public DensePoly<QExpPoly> {
 public:
  using DensePoly<QExpPoly>::DensePoly;
  static constexpr const char* variable = "Y";
};

// [X]_q as a QExpPoly: (Y - 1)/(q - 1)
QExpPoly bracket_of_x();

// Carlitz's q-polynomial sequences.  eta(n) has Y^k-coefficient
// (q-1)^{-n} (-1)^{n-k} C(n,k) k/[k]_q with the k = 0 convention
// k/[k]_q = 1; beta(n) uses (k+1)/[k+1]_q instead.
QExpPoly eta(int n);
QExpPoly beta(int n);

// values at X = 0, i.e. Y = 1
QRat eta_number(int n);
QRat beta_number(int n);

// sum_{k=0}^{n} C(n,k) coeffs[k] Y^k ((Y-1)/(q-1))^{n-k}; coeffs must have
// length n + 1
QExpPoly mixed_basis_expansion(const std::vector<QRat>& coeffs, int n);

// d/dX with the scalar log q factored out: Y^k -> k Y^k
QExpPoly scaled_x_derivative(const QExpPoly& p);

// substitution t = [X]_q = (Y-1)/(q-1), expanded in powers of Y
QExpPoly from_xpoly(const XPoly& p);

// evaluation at X = N, i.e. Y = q^N
QRat eval_at_integer(const QExpPoly& p, int N);

// sum_{k=0}^{N-1} q^k [k]_q^{n-1}, summed directly in Q(q)
QRat power_sum(int n, int N);

}  // namespace qbern
