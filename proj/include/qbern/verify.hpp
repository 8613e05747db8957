#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbern/json_io.hpp"
#include "qbern/rational.hpp"
#include "qbern/xpoly.hpp"

namespace qbern {

// Identity suite: every checked identity has a stable tag; the tag set is
// part of the report wire format.
enum class IdentityTag {
  EQ1,          // defining integral residual of B_{n,q}(X)
  EQ6,          // mixed-basis expansion of eta(n)
  EQ7,          // mixed-basis expansion of beta(n)
  EQ8,          // first four Carlitz numbers, frozen closed forms
  PROP2,        // q-power sums against eta differences
  PROP3,        // scaled derivative of eta against beta
  PROP4,        // constant term of B_{n,q} equals F'_{n,q}(0)
  THM1,         // F_{n,q}([X]_q) against the eta(n+1) difference quotient
  COR1,         // F'_{n,q}([X]_q) = beta(n)
  COR2,         // B_{n,q} = beta_number(n)
  THM2,         // q -> 1 limit vs classical oracle + double-sum rebuild
  REMARK_F,     // beta(n) from differentiating the integral of B_{n,q}
  REMARK_BETA,  // beta(n) from differentiating the integral of ((t-1)/(q-1))^n
  NUM_JACKSON,  // floating-point Jackson series vs closed form
};

// all tags in report order
const std::vector<IdentityTag>& all_identity_tags();

std::string to_string(IdentityTag tag);
// UsageError on an unknown tag name
IdentityTag identity_tag_from_string(const std::string& name);

struct IdentityParams {
  std::optional<int> n;
  std::optional<int> N;
  std::optional<int> degree;
  std::optional<Rational> q0;
};

struct VerifyReport {
  IdentityTag identity = IdentityTag::EQ1;
  IdentityParams params;
  bool passed = false;
  // canonical serialized forms and a discrepancy note, filled on failure
  std::string lhs;
  std::string rhs;
  std::string detail;
};

// Checks one identity instance.  Out-of-range or missing parameters are a
// UsageError; a failed identity is a report with passed = false, never an
// exception.
VerifyReport run_identity(IdentityTag tag, const IdentityParams& params);

// The EQ1 residual check against an arbitrary candidate polynomial, so a
// corrupted candidate can be shown to fail.
VerifyReport eq1_report(int n, const XPoly& candidate);

struct NumericSample {
  Rational q0;
  Rational a;
  Rational b;
  int truncation = 200;
  double tolerance = 1e-10;
};

struct NumericResult {
  double series_value = 0;
  double closed_form_value = 0;
};

// Truncated Jackson series for the integral of P over [a, b] at q = q0 (the
// series branch follows the side of 1 that q0 lies on), next to the exact
// closed form evaluated at q0.  The geometric tail estimate after truncation
// must come out below tolerance / 10, otherwise the truncation is rejected
// as a UsageError.
NumericResult numeric_jackson(const XPoly& P, const NumericSample& sample);

// Full grid over all tags: n ranges over 0..max_n (1..max(max_n, 1) where
// n = 0 is out of range, 0..3 for the frozen-value tag), N over 1..max_N,
// and the numeric tag over its fixed fixture grid.  Deterministic order.
std::vector<VerifyReport> run_suite(int max_n, int max_N);
// same, restricted to the given tags (empty means all)
std::vector<VerifyReport> run_suite(int max_n, int max_N,
                                    const std::vector<IdentityTag>& tags);

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
};

SuiteSummary summarize(const std::vector<VerifyReport>& reports);

// one JSON-lines record; lhs/rhs/detail fields appear only on failure
ojson report_to_json(const VerifyReport& report);
ojson summary_to_json(const SuiteSummary& summary, long long elapsed_ms);

}  // namespace qbern
