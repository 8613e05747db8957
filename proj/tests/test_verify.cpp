#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "qbern/bernoulli.hpp"
#include "qbern/verify.hpp"

using qbern::all_identity_tags;
using qbern::eq1_report;
using qbern::identity_tag_from_string;
using qbern::IdentityParams;
using qbern::IdentityTag;
using qbern::NumericResult;
using qbern::NumericSample;
using qbern::numeric_jackson;
using qbern::qbernoulli;
using qbern::QRat;
using qbern::Rational;
using qbern::report_to_json;
using qbern::run_identity;
using qbern::run_suite;
using qbern::SuiteSummary;
using qbern::summarize;
using qbern::summary_to_json;
using qbern::to_string;
using qbern::UsageError;
using qbern::VerifyReport;
using qbern::XPoly;

namespace {

struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

IdentityParams with_n(int n) {
  IdentityParams p;
  p.n = n;
  return p;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("tag names are a stable wire contract") {
  const std::vector<std::string> expected = {
      "EQ1",   "EQ6",  "EQ7",  "EQ8",  "PROP2",    "PROP3",       "PROP4",
      "THM1",  "COR1", "COR2", "THM2", "REMARK_F", "REMARK_BETA", "NUM_JACKSON",
  };
  const auto& tags = all_identity_tags();
  REQUIRE(tags.size() == expected.size());
  for (size_t i = 0; i < tags.size(); ++i) {
    CHECK(to_string(tags[i]) == expected[i]);
    CHECK(identity_tag_from_string(expected[i]) == tags[i]);
  }
  CHECK_THROWS_AS(identity_tag_from_string("BOGUS"), UsageError);
  CHECK_THROWS_AS(identity_tag_from_string("eq1"), UsageError);
}

TEST_CASE("single identity instances pass") {
  VerifyReport r = run_identity(IdentityTag::COR2, with_n(3));
  CHECK(r.passed);
  CHECK(*r.params.n == 3);
  CHECK(r.lhs.empty());

  CHECK(run_identity(IdentityTag::EQ1, with_n(0)).passed);
  CHECK(run_identity(IdentityTag::THM1, with_n(5)).passed);
  CHECK(run_identity(IdentityTag::REMARK_BETA, with_n(4)).passed);

  IdentityParams p = with_n(2);
  p.N = 3;
  CHECK(run_identity(IdentityTag::PROP2, p).passed);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(run_identity(IdentityTag::EQ1, IdentityParams{}), UsageError);
  CHECK_THROWS_AS(run_identity(IdentityTag::EQ1, with_n(-1)), UsageError);
  CHECK_THROWS_AS(run_identity(IdentityTag::EQ8, with_n(4)), UsageError);
  CHECK_THROWS_AS(run_identity(IdentityTag::PROP2, with_n(2)), UsageError);
  CHECK_THROWS_AS(run_identity(IdentityTag::NUM_JACKSON, with_n(1)),
                  UsageError);
}

TEST_CASE("a corrupted polynomial fails the defining residual") {
  XPoly bad = qbernoulli(2).poly + XPoly::monomial(1);
  VerifyReport r = eq1_report(2, bad);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.lhs.empty());
  CHECK_FALSE(r.rhs.empty());
  CHECK(r.lhs != r.rhs);
  CHECK_FALSE(r.detail.empty());
}

TEST_CASE("suite order is deterministic") {
  std::vector<VerifyReport> first = run_suite(3, 2);
  std::vector<VerifyReport> second = run_suite(3, 2);
  REQUIRE(first.size() == second.size());
  for (size_t i = 0; i < first.size(); ++i)
    CHECK(report_to_json(first[i]).dump() == report_to_json(second[i]).dump());
}

TEST_CASE("minimal suite covers every tag and passes") {
  std::vector<VerifyReport> reports = run_suite(0, 1);
  std::set<IdentityTag> seen;
  for (const auto& r : reports) {
    seen.insert(r.identity);
    CHECK(r.passed);
  }
  CHECK(seen.size() == all_identity_tags().size());
  SuiteSummary s = summarize(reports);
  CHECK(s.total == static_cast<int>(reports.size()));
  CHECK(s.passed == s.total);
  CHECK(s.failed == 0);
}

TEST_CASE("restricted suite runs only the requested tags") {
  std::vector<VerifyReport> reports =
      run_suite(12, 1, {IdentityTag::COR2});
  CHECK(reports.size() == 13);
  for (const auto& r : reports) CHECK(r.identity == IdentityTag::COR2);
}

TEST_CASE("report and summary serialization") {
  VerifyReport ok = run_identity(IdentityTag::COR2, with_n(1));
  auto j = report_to_json(ok);
  CHECK(j["identity"] == "COR2");
  CHECK(j["params"]["n"] == 1);
  CHECK(j["passed"] == true);
  CHECK_FALSE(j.contains("lhs"));

  auto jf = report_to_json(eq1_report(1, XPoly::monomial(1)));
  CHECK(jf["passed"] == false);
  CHECK(jf.contains("lhs"));
  CHECK(jf.contains("rhs"));
  CHECK(jf.contains("detail"));

  SuiteSummary s;
  s.total = 3;
  s.passed = 2;
  s.failed = 1;
  CHECK(summary_to_json(s, 42).dump() ==
        R"({"total":3,"passed":2,"failed":1,"elapsed_ms":42})");
}

TEST_CASE("numeric fixtures hit their closed forms") {
  NumericSample s;
  s.a = Rational(0);
  s.b = Rational(1);

  s.q0 = Rational(1, 2);
  NumericResult r = numeric_jackson(XPoly::monomial(1), s);
  CHECK(r.closed_form_value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(r.series_value - r.closed_form_value) <= s.tolerance);

  r = numeric_jackson(XPoly::monomial(2), s);
  CHECK(r.closed_form_value == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
  CHECK(std::abs(r.series_value - r.closed_form_value) <= s.tolerance);

  s.q0 = Rational(2);
  r = numeric_jackson(XPoly::monomial(2), s);
  CHECK(r.closed_form_value == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  CHECK(std::abs(r.series_value - r.closed_form_value) <= s.tolerance);

  r = numeric_jackson(XPoly::monomial(3), s);
  CHECK(r.closed_form_value == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
  CHECK(std::abs(r.series_value - r.closed_form_value) <= s.tolerance);
}

TEST_CASE("series matches closed form on random integrands") {
  Lcg rng(20260817u);
  const Rational qs[] = {Rational(1, 3), Rational(1, 2), Rational(2),
                         Rational(3)};
  const Rational pts[] = {Rational(0), Rational(1, 2), Rational(1),
                          Rational(2)};
  for (int trial = 0; trial < 30; ++trial) {
    int deg = rng.range(0, 4);
    std::vector<QRat> coeffs;
    for (int k = 0; k <= deg; ++k)
      coeffs.emplace_back(
          Rational(rng.range(-9, 9), rng.range(1, 9)));
    XPoly p(coeffs);
    NumericSample s;
    s.q0 = qs[rng.range(0, 3)];
    s.a = pts[rng.range(0, 3)];
    s.b = pts[rng.range(0, 3)];
    s.truncation = 250;
    NumericResult r = numeric_jackson(p, s);
    CHECK(std::abs(r.series_value - r.closed_form_value) <= s.tolerance);
  }
}

TEST_CASE("numeric parameter validation") {
  NumericSample s;
  s.a = Rational(0);
  s.b = Rational(1);

  s.q0 = Rational(1);
  CHECK_THROWS_AS(numeric_jackson(XPoly::monomial(1), s), UsageError);
  s.q0 = Rational(-1, 2);
  CHECK_THROWS_AS(numeric_jackson(XPoly::monomial(1), s), UsageError);

  s.q0 = Rational(1, 2);
  s.truncation = 0;
  CHECK_THROWS_AS(numeric_jackson(XPoly::monomial(1), s), UsageError);
  s.truncation = 3;  // tail estimate too coarse for the default tolerance
  CHECK_THROWS_AS(numeric_jackson(XPoly::monomial(1), s), UsageError);
  s.truncation = 200;
  s.tolerance = 0.0;
  CHECK_THROWS_AS(numeric_jackson(XPoly::monomial(1), s), UsageError);
}

}  // TEST_SUITE
