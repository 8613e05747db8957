#include "qbern/xpoly.hpp"

namespace qbern {

XPoly q_derivative(const XPoly& p) {
  std::vector<QRat> c;
  for (int k = 1; k <= p.degree(); ++k) c.push_back(p.coeff(k) * bracket(k));
  return XPoly(std::move(c));
}

XPoly q_antiderivative(const XPoly& p) {
  std::vector<QRat> c;
  c.push_back(QRat());
  for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k) / bracket(k + 1));
  return XPoly(std::move(c));
}

XPoly jackson_integral(const XPoly& p, const XPoly& a, const XPoly& b) {
  const XPoly f = q_antiderivative(p);
  return substitute(f, b) - substitute(f, a);
}

XPoly classical_derivative(const XPoly& p) {
  std::vector<QRat> c;
  for (int k = 1; k <= p.degree(); ++k) c.push_back(p.coeff(k) * QRat(k));
  return XPoly(std::move(c));
}

XPoly classical_antiderivative(const XPoly& p) {
  std::vector<QRat> c;
  c.push_back(QRat());
  for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k) / QRat(k + 1));
  return XPoly(std::move(c));
}

XPoly substitute(const XPoly& p, const XPoly& s) {
  XPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * s + XPoly(p.coeff(k));
  return acc;
}

}  // namespace qbern
