#include <doctest.h>

#include "qbern/bernoulli.hpp"
#include "qbern/json_io.hpp"
#include "qbern/render.hpp"

using qbern::beta;
using qbern::bracket;
using qbern::csv_quote;
using qbern::ojson;
using qbern::qbernoulli;
using qbern::QExpPoly;
using qbern::qexppoly_from_json;
using qbern::qexppoly_to_json;
using qbern::QPoly;
using qbern::QRat;
using qbern::qrat_from_json;
using qbern::qrat_to_json;
using qbern::Rational;
using qbern::rational_from_json;
using qbern::rational_to_json;
using qbern::ratpoly_from_json;
using qbern::ratpoly_to_json;
using qbern::render_qexppoly;
using qbern::render_qrat;
using qbern::render_ratpoly;
using qbern::render_xpoly;
using qbern::RenderOptions;
using qbern::TextStyle;
using qbern::UsageError;
using qbern::XPoly;
using qbern::xpoly_from_json;
using qbern::xpoly_to_json;

namespace {
constexpr RenderOptions kLatex{TextStyle::latex, false};
constexpr RenderOptions kLatexBrackets{TextStyle::latex, true};
constexpr RenderOptions kPlain{TextStyle::plain, false};
constexpr RenderOptions kPlainBrackets{TextStyle::plain, true};
const QRat q = QRat::q_power(1);
}  // namespace

TEST_SUITE("json_render") {

TEST_CASE("rational wire form") {
  CHECK(rational_to_json(Rational(-1, 2)) == ojson("-1/2"));
  CHECK(rational_from_json(ojson("3/4")) == Rational(3, 4));
  CHECK(rational_from_json(ojson(7)) == Rational(7));
  CHECK_THROWS_AS(rational_from_json(ojson(1.5)), UsageError);
}

TEST_CASE("qrat round trip") {
  QRat v = -(q * (q - QRat(1))) / (bracket(3) * bracket(4));
  ojson j = qrat_to_json(v);
  CHECK(j.contains("num"));
  CHECK(j.contains("den"));
  CHECK(qrat_from_json(j) == v);
  // non-canonical input canonicalizes on parse
  ojson raw = {{"num", {"2/1", "2/1"}}, {"den", {"2/1"}}};
  CHECK(qrat_from_json(raw) == QRat(QPoly{1, 1}));
}

TEST_CASE("xpoly round trip is byte-identical") {
  for (int n = 0; n <= 6; ++n) {
    const XPoly& p = qbernoulli(n).poly;
    std::string once = xpoly_to_json(p).dump();
    XPoly back = xpoly_from_json(ojson::parse(once));
    CHECK(back == p);
    CHECK(xpoly_to_json(back).dump() == once);
  }
}

TEST_CASE("qexppoly round trip carries its meaning field") {
  QExpPoly p = beta(3);
  ojson j = qexppoly_to_json(p);
  CHECK(j["variable"] == "Y");
  CHECK(j["meaning"] == "q^X");
  CHECK(qexppoly_from_json(j) == p);
}

TEST_CASE("parsers reject malformed objects") {
  CHECK_THROWS_AS(xpoly_from_json(ojson::parse(R"({"coefficients": []})")),
                  UsageError);
  CHECK_THROWS_AS(
      xpoly_from_json(ojson::parse(R"({"variable": "Y", "coefficients": []})")),
      UsageError);
  CHECK_THROWS_AS(
      xpoly_from_json(ojson::parse(R"({"variable": "X"})")), UsageError);
  CHECK_THROWS_AS(
      qrat_from_json(ojson::parse(R"({"num": ["1/1"]})")), UsageError);
  CHECK_THROWS_AS(
      qexppoly_from_json(ojson::parse(
          R"({"variable": "Y", "meaning": "other", "coefficients": []})")),
      UsageError);
}

TEST_CASE("plain-rational polynomial wire form") {
  XPoly p{QRat(Rational(1, 6)), QRat(-1), QRat(1)};
  ojson j = ratpoly_to_json(p);
  CHECK(j.dump() ==
        R"({"variable":"X","coefficients":["1/6","-1/1","1/1"]})");
  CHECK(ratpoly_from_json(j) == p);
  // refuses genuinely q-dependent coefficients
  CHECK_THROWS_AS(ratpoly_to_json(XPoly{q}), UsageError);
}

TEST_CASE("latex rendering of the first polynomials") {
  CHECK(render_xpoly(qbernoulli(0).poly, kLatex) == "1");
  CHECK(render_xpoly(qbernoulli(1).poly, kLatex) == "X - \\frac{1}{q + 1}");
  CHECK(render_xpoly(qbernoulli(2).poly, kLatex) ==
        "X^2 - \\frac{2q + 1}{q^2 + q + 1} X + "
        "\\frac{q}{q^3 + 2q^2 + 2q + 1}");
}

TEST_CASE("latex rendering of rational-coefficient polynomials") {
  XPoly p{QRat(Rational(1, 6)), QRat(-1), QRat(1)};
  CHECK(render_ratpoly(p, kLatex) == "X^2 - X + \\frac{1}{6}");
  CHECK(render_ratpoly(XPoly(), kLatex) == "0");
}

TEST_CASE("bracket notation folds bracket-product denominators") {
  QRat b3 = -(q * (q - QRat(1))) / (bracket(3) * bracket(4));
  CHECK(render_qrat(b3, kLatexBrackets) ==
        "-\\frac{q^2 - q}{[3]_q [4]_q}");
  CHECK(render_qrat(b3, kPlainBrackets) == "-(q^2 - q)/([3]_q[4]_q)");
  // a bracket that smaller brackets would shadow
  CHECK(render_qrat(bracket(6).reciprocal(), kLatexBrackets) ==
        "\\frac{1}{[6]_q}");
  // repeated factors fold with a power
  CHECK(render_qrat((bracket(2) * bracket(2)).reciprocal(), kLatexBrackets) ==
        "\\frac{1}{[2]_q^2}");
  // a non-bracket denominator stays expanded
  CHECK(render_qrat((q - QRat(1)).reciprocal(), kLatexBrackets) ==
        "\\frac{1}{q - 1}");
}

TEST_CASE("plain rendering") {
  CHECK(render_xpoly(qbernoulli(1).poly, kPlain) == "X - 1/(q + 1)");
  CHECK(render_qrat(QRat(Rational(-1, 2)), kPlain) == "-1/2");
  CHECK(render_qrat(QRat(5), kPlain) == "5");
  QExpPoly e{QRat(1), QRat(-2), QRat(1)};
  CHECK(render_qexppoly(e, kPlain) == "q^(2X) - 2q^X + 1");
  CHECK(render_qexppoly(e, kLatex) == "q^{2X} - 2q^X + 1");
}

TEST_CASE("csv quoting") {
  CHECK(csv_quote("plain") == "plain");
  CHECK(csv_quote("a,b") == "\"a,b\"");
  CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_quote("line\nbreak") == "\"line\nbreak\"");
}

}  // TEST_SUITE
