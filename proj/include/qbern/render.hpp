#pragma once

#include <string>

#include "qbern/qexp.hpp"
#include "qbern/xpoly.hpp"

namespace qbern {

enum class TextStyle { latex, plain };

struct RenderOptions {
  TextStyle style = TextStyle::latex;
  // Fold denominators into products of q-brackets ([2]_q [3]_q ...) when the
  // denominator splits completely into bracket factors; otherwise the
  // denominator stays expanded.
  bool bracket_notation = false;
};

// scalar in Q(q), e.g. "\frac{q}{q^3 + 2q^2 + 2q + 1}" / "q/(q^3 + 2q^2 + 2q + 1)"
std::string render_qrat(const QRat& r, const RenderOptions& opt);

// descending powers of X, coefficient 1 suppressed: "X - \frac{1}{q + 1}"
std::string render_xpoly(const XPoly& p, const RenderOptions& opt);

// descending powers of Y, with Y^k typeset as q^{kX}
std::string render_qexppoly(const QExpPoly& p, const RenderOptions& opt);

// polynomial whose coefficients are constant in q, e.g. "X^2 - X + \frac{1}{6}"
std::string render_ratpoly(const XPoly& p, const RenderOptions& opt);

// RFC-4180 style quoting: wraps in double quotes when the field contains a
// comma, quote, or newline
std::string csv_quote(const std::string& field);

}  // namespace qbern
