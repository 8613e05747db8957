#include "qbern/render.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <sstream>

namespace qbern {
namespace {

std::string exp_str(const std::string& base, int k, TextStyle style) {
  if (k == 1) return base;
  std::string e = std::to_string(k);
  if (style == TextStyle::latex && e.size() > 1) return base + "^{" + e + "}";
  return base + "^" + e;
}

int term_count(const QPoly& p) {
  int count = 0;
  for (const auto& c : p.coefficients())
    if (!c.is_zero()) ++count;
  return count;
}

// signed polynomial in q, no multiplication signs: "2q^2 + q - 1"
std::string qpoly_str(const QPoly& p, TextStyle style) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational mag = c.abs();
    if (!(mag.is_one() && k > 0)) {
      if (mag.is_integer()) {
        os << mag.str();
      } else if (style == TextStyle::latex) {
        os << "\\frac{" << mag.numerator().get_str() << "}{"
           << mag.denominator().get_str() << "}";
      } else {
        os << (k > 0 ? "(" + mag.str() + ")" : mag.str());
      }
    }
    if (k > 0) os << exp_str("q", k, style);
  }
  return os.str();
}

QPoly bracket_poly(int k) {
  return QPoly(std::vector<Rational>(static_cast<size_t>(k), Rational(1)));
}

// Full factorization of an integer-coefficient denominator into q-bracket
// factors times a positive integer; nullopt when a nontrivial polynomial
// cofactor remains.
std::optional<std::string> fold_brackets(const QPoly& den, TextStyle style) {
  QPoly d = den;
  std::map<int, int> mult;
  // Largest bracket first: [6]_q = [2]_q [3]_q (q^2 - q + 1) up to cyclotomic
  // cofactors, so stripping small brackets first can strand a non-bracket
  // remainder that a larger bracket would have absorbed whole.
  for (int k = d.degree() + 1; k >= 2; --k) {
    const QPoly b = bracket_poly(k);
    while (k - 1 <= d.degree()) {
      auto dm = divmod(d, b);
      if (!dm.rem.is_zero()) break;
      d = dm.quot;
      ++mult[k];
    }
  }
  if (mult.empty() || !d.is_constant()) return std::nullopt;
  const Rational lead = d.coeff(0);
  if (!lead.is_integer() || lead.sign() <= 0) return std::nullopt;
  std::ostringstream os;
  bool first = true;
  if (!lead.is_one()) {
    os << lead.str();
    first = false;
  }
  for (const auto& [k, m] : mult) {
    if (!first && style == TextStyle::latex) os << " ";
    first = false;
    os << "[" << k << "]_q";
    if (m > 1) os << exp_str("", m, style);
  }
  return os.str();
}

struct QRatParts {
  bool negative = false;
  std::string body;
  bool needs_parens = false;  // when juxtaposed with a power of the variable
};

QRatParts qrat_parts(const QRat& r, const RenderOptions& opt) {
  if (r.is_zero()) return {false, "0", false};
  QRatParts out;
  out.negative = r.num().leading().sign() < 0;
  QPoly num = out.negative ? -r.num() : r.num();

  // scale the numerator to integer coefficients
  mpz_class scale = 1;
  for (const auto& c : num.coefficients())
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.denominator().get_mpz_t());
  if (scale != 1) {
    num = num * Rational(scale);
  }
  QPoly den = r.den() * Rational(scale);

  if (den.is_one()) {
    out.body = qpoly_str(num, opt.style);
    out.needs_parens = term_count(num) > 1;
    return out;
  }

  std::string den_str;
  bool den_folded = false;
  if (opt.bracket_notation) {
    if (auto folded = fold_brackets(den, opt.style)) {
      den_str = *folded;
      den_folded = true;
    }
  }
  if (den_str.empty()) den_str = qpoly_str(den, opt.style);

  if (opt.style == TextStyle::latex) {
    out.body = "\\frac{" + qpoly_str(num, opt.style) + "}{" + den_str + "}";
    return out;
  }
  std::string n = term_count(num) > 1 ? "(" + qpoly_str(num, opt.style) + ")"
                                      : qpoly_str(num, opt.style);
  const bool den_simple =
      !den_folded && den_str.find_first_not_of("0123456789") == std::string::npos;
  out.body = n + "/" + (den_simple ? den_str : "(" + den_str + ")");
  return out;
}

bool body_is_plain_integer(const std::string& body) {
  return body.find_first_not_of("0123456789") == std::string::npos;
}

template <class P, class VarPow>
std::string render_poly(const P& p, const RenderOptions& opt, VarPow var_pow) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const QRat& c = p.coeff(k);
    if (c.is_zero()) continue;
    QRatParts parts = qrat_parts(c, opt);
    if (first) {
      if (parts.negative) os << "-";
      first = false;
    } else {
      os << (parts.negative ? " - " : " + ");
    }
    if (k == 0) {
      os << parts.body;
      continue;
    }
    if (parts.body != "1") {
      os << (parts.needs_parens ? "(" + parts.body + ")" : parts.body);
      if (!body_is_plain_integer(parts.body)) os << " ";
    }
    os << var_pow(k);
  }
  return os.str();
}

}  // namespace

std::string render_qrat(const QRat& r, const RenderOptions& opt) {
  QRatParts parts = qrat_parts(r, opt);
  return parts.negative ? "-" + parts.body : parts.body;
}

std::string render_xpoly(const XPoly& p, const RenderOptions& opt) {
  return render_poly(p, opt,
                     [&](int k) { return exp_str("X", k, opt.style); });
}

std::string render_qexppoly(const QExpPoly& p, const RenderOptions& opt) {
  return render_poly(p, opt, [&](int k) {
    if (k == 1) return std::string("q^X");
    std::string e = std::to_string(k) + "X";
    return opt.style == TextStyle::latex ? "q^{" + e + "}" : "q^(" + e + ")";
  });
}

std::string render_ratpoly(const XPoly& p, const RenderOptions& opt) {
  return render_xpoly(p, opt);
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace qbern
