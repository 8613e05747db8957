#pragma once

#include <json.hpp>

#include "qbern/qexp.hpp"
#include "qbern/xpoly.hpp"

namespace qbern {

// Insertion-ordered JSON keeps the documented key order on the wire, which
// makes emitted output byte-stable under parse/re-serialize round trips.
using ojson = nlohmann::ordered_json;

// Rational <-> "a/b" (lowest terms, explicit denominator)
ojson rational_to_json(const Rational& r);
Rational rational_from_json(const ojson& j);

// QRat <-> {"num": ["a/b", ...], "den": ["a/b", ...]}, little-endian in q
ojson qrat_to_json(const QRat& r);
QRat qrat_from_json(const ojson& j);

// XPoly <-> {"variable": "X", "coefficients": [QRat, ...]}
ojson xpoly_to_json(const XPoly& p);
XPoly xpoly_from_json(const ojson& j);

// QExpPoly <-> {"variable": "Y", "meaning": "q^X", "coefficients": [QRat, ...]}
ojson qexppoly_to_json(const QExpPoly& p);
QExpPoly qexppoly_from_json(const ojson& j);

// polynomial over plain Q (every coefficient constant in q) <->
// {"variable": "X", "coefficients": ["a/b", ...]}
ojson ratpoly_to_json(const XPoly& p);
XPoly ratpoly_from_json(const ojson& j);

}  // namespace qbern
