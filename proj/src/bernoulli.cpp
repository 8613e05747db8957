#include "qbern/bernoulli.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qbern/linsolve.hpp"
#include "qbern/rational.hpp"

namespace qbern {

namespace {

// (q-1) X^{n+1} + X^n, the right-hand side of the defining equation
XPoly defining_rhs(int n) {
  XPoly r = XPoly::monomial(n + 1, QRat(QPoly{-1, 1}));
  r += XPoly::monomial(n);
  return r;
}

XPoly integral_of_monomial(int k) {
  const XPoly x = XPoly::monomial(1);
  const XPoly upper{QRat(1), QRat(QPoly{0, 1})};  // qX + 1
  return jackson_integral(XPoly::monomial(k), x, upper);
}

}  // namespace

LinearSystem build_system(int n) {
  if (n < 0) throw UsageError("build_system requires n >= 0");
  const size_t dim = static_cast<size_t>(n) + 1;
  LinearSystem sys;
  sys.matrix.assign(dim, std::vector<QRat>(dim));
  sys.rhs.assign(dim, QRat());
  for (int k = 0; k <= n; ++k) {
    const XPoly col = integral_of_monomial(k);
    for (int j = 0; j <= n; ++j)
      sys.matrix[static_cast<size_t>(j)][static_cast<size_t>(k)] = col.coeff(j);
  }
  const XPoly rhs_poly = defining_rhs(n);
  for (int j = 0; j <= n; ++j) sys.rhs[static_cast<size_t>(j)] = rhs_poly.coeff(j);
  return sys;
}

std::vector<QRat> solve_system(const LinearSystem& sys) {
  std::vector<QRat> sol = solve_dense_system(sys.matrix, sys.rhs);
  for (size_t j = 0; j < sol.size(); ++j) {
    QRat acc;
    for (size_t k = 0; k < sol.size(); ++k) acc += sys.matrix[j][k] * sol[k];
    if (!(acc == sys.rhs[j]))
      throw ContradictionError("linear solve residual is nonzero");
  }
  return sol;
}

const QBernoulliResult& qbernoulli(int n) {
  if (n < 0) throw UsageError("qbernoulli requires n >= 0");

  static std::mutex mu;
  static std::map<int, std::unique_ptr<const QBernoulliResult>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }

  std::vector<QRat> sol = solve_system(build_system(n));
  if (!sol.back().is_one())
    throw ContradictionError("B_{n,q} did not come out monic; the X^{n+1} row is inconsistent");

  auto res = std::make_unique<QBernoulliResult>();
  res->n = n;
  res->poly = XPoly(std::move(sol));
  res->antiderivative = q_antiderivative(res->poly);
  res->number = res->poly.coeff(0);

  if (res->poly.degree() != n)
    throw ContradictionError("B_{n,q} has wrong degree");
  const XPoly x = XPoly::monomial(1);
  const XPoly upper{QRat(1), QRat(QPoly{0, 1})};
  if (!(jackson_integral(res->poly, x, upper) == defining_rhs(n)))
    throw ContradictionError("B_{n,q} does not satisfy its defining integral equation");
  if (!(res->number == res->antiderivative.coeff(1)))
    throw ContradictionError("B_{n,q}(0) != F'_{n,q}(0)");

  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(n, std::move(res));
  return *it->second;  // on a lost race, the first insert wins
}

XPoly classical_bernoulli(int n) {
  if (n < 0) throw UsageError("classical_bernoulli requires n >= 0");
  // column k: integral of t^k from X to X+1 = ((X+1)^{k+1} - X^{k+1})/(k+1),
  // a monic polynomial of degree k, all over Q
  const size_t dim = static_cast<size_t>(n) + 1;
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim, Rational(0)));
  std::vector<Rational> rhs(dim, Rational(0));
  for (int k = 0; k <= n; ++k) {
    const Rational inv(1, static_cast<long>(k) + 1);
    for (int j = 0; j <= k; ++j)
      m[static_cast<size_t>(j)][static_cast<size_t>(k)] = Rational(binomial(k + 1, j)) * inv;
  }
  rhs[static_cast<size_t>(n)] = Rational(1);
  std::vector<Rational> sol = solve_dense_system(std::move(m), std::move(rhs));
  std::vector<QRat> coeffs;
  coeffs.reserve(sol.size());
  for (const auto& c : sol) coeffs.emplace_back(c);
  return XPoly(std::move(coeffs));
}

XPoly limit_q_to_1(const XPoly& p) {
  std::vector<QRat> out;
  out.reserve(p.coefficients().size());
  for (int k = 0; k <= p.degree(); ++k) {
    try {
      out.emplace_back(p.coeff(k).limit_at_1());
    } catch (const PoleError&) {
      throw PoleError("coefficient of X^" + std::to_string(k) + " has a pole at q = 1",
                      "1/1", k);
    }
  }
  return XPoly(std::move(out));
}

QExpPoly beta_via_remark(int n) {
  if (n < 0) throw UsageError("beta_via_remark requires n >= 0");
  // ((t - 1)/(q - 1))^n as a polynomial in t
  const QRat inv = QRat(QPoly{-1, 1}).reciprocal();
  XPoly integrand = XPoly{-inv, inv}.pow(static_cast<unsigned>(n));
  XPoly g = classical_derivative(q_antiderivative(integrand));
  // s = q^X: the polynomial in s is already the Y-representation
  return QExpPoly(std::vector<QRat>(g.coefficients()));
}

QExpPoly beta_via_F(int n) {
  if (n < 0) throw UsageError("beta_via_F requires n >= 0");
  return from_xpoly(classical_derivative(qbernoulli(n).antiderivative));
}

XPoly bernoulli_via_carlitz_expansion(int n) {
  if (n < 0) throw UsageError("bernoulli_via_carlitz_expansion requires n >= 0");
  const QRat qm1(QPoly{-1, 1});
  std::vector<QRat> betas;
  betas.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) betas.push_back(beta_number(k));
  XPoly acc;
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= k; ++i) {
      const int deg = n + i - k;
      QRat c = QRat(Rational(binomial(n, k) * binomial(k, i))) * betas[static_cast<size_t>(k)];
      c *= qm1.pow(static_cast<unsigned>(i));
      c *= bracket(deg + 1) / QRat(deg + 1);
      acc += XPoly::monomial(deg, c);
    }
  }
  return acc;
}

}  // namespace qbern
