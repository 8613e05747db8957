#include "qbern/qexp.hpp"

namespace qbern {

namespace {

QRat q_minus_one() { return QRat(QPoly{-1, 1}); }

// shared core of eq. (4)/(5)-style sums; weight(k) supplies k/[k]_q or
// (k+1)/[k+1]_q
template <class WeightFn>
QExpPoly carlitz_sum(int n, WeightFn weight) {
  if (n < 0) throw UsageError("Carlitz sequence index must be nonnegative");
  const QRat prefactor = q_minus_one().pow(static_cast<unsigned>(n)).reciprocal();
  std::vector<QRat> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    QRat term = QRat(Rational(binomial(n, k))) * weight(k);
    if ((n - k) % 2 != 0) term = -term;
    c[static_cast<size_t>(k)] = prefactor * term;
  }
  return QExpPoly(std::move(c));
}

}  // namespace

QExpPoly bracket_of_x() {
  const QRat inv = q_minus_one().reciprocal();
  return QExpPoly({-inv, inv});
}

QExpPoly eta(int n) {
  return carlitz_sum(n, [](int k) {
    // convention: k/[k]_q = 1 at k = 0
    return k == 0 ? QRat(1) : QRat(k) / bracket(k);
  });
}

QExpPoly beta(int n) {
  return carlitz_sum(n, [](int k) { return QRat(k + 1) / bracket(k + 1); });
}

QRat eta_number(int n) { return eta(n).eval(QRat(1)); }

QRat beta_number(int n) { return beta(n).eval(QRat(1)); }

QExpPoly mixed_basis_expansion(const std::vector<QRat>& coeffs, int n) {
  if (n < 0) throw UsageError("mixed_basis_expansion requires n >= 0");
  if (coeffs.size() != static_cast<size_t>(n) + 1)
    throw UsageError("mixed_basis_expansion needs exactly n + 1 coefficients");
  const QExpPoly bx = bracket_of_x();
  QExpPoly acc;
  for (int k = 0; k <= n; ++k) {
    QExpPoly term = QExpPoly::monomial(k) * bx.pow(static_cast<unsigned>(n - k));
    acc += term * (QRat(Rational(binomial(n, k))) * coeffs[static_cast<size_t>(k)]);
  }
  return acc;
}

QExpPoly scaled_x_derivative(const QExpPoly& p) {
  std::vector<QRat> c(p.coefficients());
  for (int k = 0; k < static_cast<int>(c.size()); ++k) c[static_cast<size_t>(k)] *= QRat(k);
  return QExpPoly(std::move(c));
}

QExpPoly from_xpoly(const XPoly& p) {
  const QExpPoly bx = bracket_of_x();
  QExpPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * bx + QExpPoly(p.coeff(k));
  return acc;
}

QRat eval_at_integer(const QExpPoly& p, int N) {
  if (N < 0) throw UsageError("eval_at_integer requires N >= 0");
  return p.eval(QRat::q_power(N));
}

QRat power_sum(int n, int N) {
  if (n < 1 || N < 1) throw UsageError("power_sum requires n >= 1 and N >= 1");
  QRat acc;
  for (int k = 0; k < N; ++k)
    acc += QRat::q_power(k) * bracket(k).pow(static_cast<unsigned>(n - 1));
  return acc;
}

}  // namespace qbern
