#pragma once

#include "qbern/qexp.hpp"
#include "qbern/xpoly.hpp"

namespace qbern {

// B_{n,q}(X) together with its q-antiderivative F_{n,q}(X) (vanishing at 0)
// and the q-Bernoulli number B_{n,q} = B_{n,q}(0).
struct QBernoulliResult {
  int n = 0;
  XPoly poly;            // B_{n,q}(X), monic of degree n
  XPoly antiderivative;  // F_{n,q}(X)
  QRat number;           // B_{n,q}
};

// The (n+1) x (n+1) system over Q(q) whose solution vector holds the
// coefficients of B_{n,q}(X).
struct LinearSystem {
  std::vector<std::vector<QRat>> matrix;
  std::vector<QRat> rhs;
};

// Row j equates the coefficient of X^j; column k holds the coefficients of
// the Jackson integral of t^k over the bounds X and qX + 1.  The X^{n+1}
// row is left out: it reduces to the monic condition and is re-checked when
// the system is solved.
LinearSystem build_system(int n);

// Exact Gaussian elimination; the residual matrix * solution = rhs is
// re-verified before returning.
std::vector<QRat> solve_system(const LinearSystem& sys);

// Solves the defining integral equation for B_{n,q}(X) and packages the
// result.  The full residual (the integral identity itself, including the
// X^{n+1} row) is asserted exactly.  Results are memoized; distinct n are
// safe to request concurrently.
const QBernoulliResult& qbernoulli(int n);

// Classical Bernoulli polynomial B_n(X) from its integral characterization
// over the bounds X and X + 1, solved exactly over Q.  Independent of q
// throughout; the q -> 1 oracle.
XPoly classical_bernoulli(int n);

// coefficientwise evaluation at q = 1; PoleError identifies the offending
// coefficient index
XPoly limit_q_to_1(const XPoly& p);

// beta_{n,q}(X) as the derivative of the q-antiderivative of
// ((t - 1)/(q - 1))^n, read in the variable s = q^X
QExpPoly beta_via_remark(int n);

// beta_{n,q}(X) = F'_{n,q}([X]_q)
QExpPoly beta_via_F(int n);

// B_{n,q}(X) rebuilt from the Carlitz numbers by the binomial double sum
// sum_{k,i} C(n,k) C(k,i) beta_k (q-1)^i ([n+i-k+1]_q/(n+i-k+1)) X^{n+i-k};
// an independent construction path for cross-checking the solver
XPoly bernoulli_via_carlitz_expansion(int n);

}  // namespace qbern
