#include "qbern/json_io.hpp"

#include <string>
#include <vector>

#include "qbern/errors.hpp"

namespace qbern {
namespace {

Rational rational_from_value(const ojson& j) {
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw UsageError("expected a rational encoded as \"a/b\" or an integer");
}

std::vector<Rational> coeffs_from_array(const ojson& j, const char* where) {
  if (!j.is_array()) throw UsageError(std::string(where) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(rational_from_value(item));
  return out;
}

ojson qpoly_to_array(const QPoly& p) {
  ojson arr = ojson::array();
  for (int i = 0; i <= std::max(p.degree(), 0); ++i)
    arr.push_back(p.coeff(i).fraction_str());
  return arr;
}

const ojson& require_field(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw UsageError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void require_variable(const ojson& j, const std::string& expected) {
  const ojson& v = require_field(j, "variable");
  if (!v.is_string() || v.get<std::string>() != expected)
    throw UsageError("field \"variable\" must be \"" + expected + "\"");
}

template <class P>
ojson poly_coeff_array(const P& p) {
  ojson arr = ojson::array();
  for (int i = 0; i <= std::max(p.degree(), 0); ++i)
    arr.push_back(qrat_to_json(p.coeff(i)));
  return arr;
}

template <class P>
P poly_from_coeff_array(const ojson& arr) {
  if (!arr.is_array()) throw UsageError("\"coefficients\" must be an array");
  std::vector<QRat> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& item : arr) coeffs.push_back(qrat_from_json(item));
  return P(std::move(coeffs));
}

}  // namespace

ojson rational_to_json(const Rational& r) { return r.fraction_str(); }

Rational rational_from_json(const ojson& j) { return rational_from_value(j); }

ojson qrat_to_json(const QRat& r) {
  ojson j;
  j["num"] = qpoly_to_array(r.num());
  j["den"] = qpoly_to_array(r.den());
  return j;
}

QRat qrat_from_json(const ojson& j) {
  QPoly num(coeffs_from_array(require_field(j, "num"), "\"num\""));
  QPoly den(coeffs_from_array(require_field(j, "den"), "\"den\""));
  return QRat(std::move(num), std::move(den));
}

ojson xpoly_to_json(const XPoly& p) {
  ojson j;
  j["variable"] = "X";
  j["coefficients"] = poly_coeff_array(p);
  return j;
}

XPoly xpoly_from_json(const ojson& j) {
  require_variable(j, "X");
  return poly_from_coeff_array<XPoly>(require_field(j, "coefficients"));
}

ojson qexppoly_to_json(const QExpPoly& p) {
  ojson j;
  j["variable"] = "Y";
  j["meaning"] = "q^X";
  j["coefficients"] = poly_coeff_array(p);
  return j;
}

QExpPoly qexppoly_from_json(const ojson& j) {
  require_variable(j, "Y");
  const ojson& meaning = require_field(j, "meaning");
  if (!meaning.is_string() || meaning.get<std::string>() != "q^X")
    throw UsageError("field \"meaning\" must be \"q^X\"");
  return poly_from_coeff_array<QExpPoly>(require_field(j, "coefficients"));
}

ojson ratpoly_to_json(const XPoly& p) {
  ojson j;
  j["variable"] = "X";
  ojson arr = ojson::array();
  for (int i = 0; i <= std::max(p.degree(), 0); ++i) {
    const QRat& c = p.coeff(i);
    if (!c.is_constant())
      throw UsageError("polynomial has a coefficient depending on q; "
                       "use the general encoding");
    arr.push_back(c.constant_value().fraction_str());
  }
  j["coefficients"] = arr;
  return j;
}

XPoly ratpoly_from_json(const ojson& j) {
  require_variable(j, "X");
  const ojson& arr = require_field(j, "coefficients");
  if (!arr.is_array()) throw UsageError("\"coefficients\" must be an array");
  std::vector<QRat> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& item : arr) coeffs.emplace_back(rational_from_value(item));
  return XPoly(std::move(coeffs));
}

}  // namespace qbern
