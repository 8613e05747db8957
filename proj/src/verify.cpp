#include "qbern/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "qbern/bernoulli.hpp"
#include "qbern/qexp.hpp"
#include "qbern/render.hpp"

namespace qbern {
namespace {

constexpr RenderOptions kPlain{TextStyle::plain, false};

std::string fmt(const XPoly& p) { return render_xpoly(p, kPlain); }
std::string fmt(const QExpPoly& p) { return render_qexppoly(p, kPlain); }
std::string fmt(const QRat& r) { return render_qrat(r, kPlain); }
std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

template <class T>
VerifyReport exact_report(IdentityTag tag, IdentityParams params, const T& lhs,
                          const T& rhs, const char* mismatch_note) {
  VerifyReport r;
  r.identity = tag;
  r.params = std::move(params);
  r.passed = lhs == rhs;
  if (!r.passed) {
    r.lhs = fmt(lhs);
    r.rhs = fmt(rhs);
    r.detail = mismatch_note;
  }
  return r;
}

int require_n(const IdentityParams& params, IdentityTag tag, int min_n) {
  if (!params.n)
    throw UsageError(to_string(tag) + " requires parameter n");
  if (*params.n < min_n)
    throw UsageError(to_string(tag) + " requires n >= " + std::to_string(min_n));
  return *params.n;
}

QRat q_minus_1() { return QRat(QPoly{-1, 1}); }

// (q - 1) X^{n+1} + X^n, the right-hand side of the defining equation
XPoly defining_rhs(int n) {
  return XPoly::monomial(n + 1, q_minus_1()) + XPoly::monomial(n);
}

QRat frozen_carlitz_number(int n) {
  switch (n) {
    case 0:
      return QRat(1);
    case 1:
      return QRat(-1) / bracket(2);
    case 2:
      return QRat::q_power(1) / (bracket(2) * bracket(3));
    case 3:
      return -(QRat::q_power(1) * q_minus_1()) / (bracket(3) * bracket(4));
    default:
      throw UsageError("EQ8 has frozen values for n <= 3 only");
  }
}

VerifyReport check_eq6(int n) {
  std::vector<QRat> numbers;
  numbers.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) numbers.push_back(eta_number(k));
  IdentityParams p;
  p.n = n;
  return exact_report(IdentityTag::EQ6, p, mixed_basis_expansion(numbers, n),
                      eta(n), "mixed-basis expansion differs from eta(n)");
}

VerifyReport check_eq7(int n) {
  std::vector<QRat> numbers;
  numbers.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) numbers.push_back(beta_number(k));
  IdentityParams p;
  p.n = n;
  return exact_report(IdentityTag::EQ7, p, mixed_basis_expansion(numbers, n),
                      beta(n), "mixed-basis expansion differs from beta(n)");
}

VerifyReport check_thm2(int n) {
  IdentityParams p;
  p.n = n;
  VerifyReport limit_part =
      exact_report(IdentityTag::THM2, p, limit_q_to_1(qbernoulli(n).poly),
                   classical_bernoulli(n),
                   "q -> 1 limit differs from the classical polynomial");
  if (!limit_part.passed) return limit_part;
  return exact_report(IdentityTag::THM2, p, bernoulli_via_carlitz_expansion(n),
                      qbernoulli(n).poly,
                      "double-sum rebuild differs from the solved polynomial");
}

VerifyReport check_num_jackson(const IdentityParams& params) {
  if (!params.degree || !params.q0)
    throw UsageError("NUM_JACKSON requires parameters degree and q0");
  if (*params.degree < 0) throw UsageError("NUM_JACKSON requires degree >= 0");
  NumericSample sample;
  sample.q0 = *params.q0;
  sample.a = Rational(0);
  sample.b = Rational(1);
  NumericResult values =
      numeric_jackson(XPoly::monomial(*params.degree), sample);
  VerifyReport r;
  r.identity = IdentityTag::NUM_JACKSON;
  r.params = params;
  r.passed = std::abs(values.series_value - values.closed_form_value) <=
             sample.tolerance;
  if (!r.passed) {
    r.lhs = fmt(values.series_value);
    r.rhs = fmt(values.closed_form_value);
    r.detail = "truncated Jackson series differs from the closed form";
  }
  return r;
}

}  // namespace

const std::vector<IdentityTag>& all_identity_tags() {
  static const std::vector<IdentityTag> tags = {
      IdentityTag::EQ1,      IdentityTag::EQ6,         IdentityTag::EQ7,
      IdentityTag::EQ8,      IdentityTag::PROP2,       IdentityTag::PROP3,
      IdentityTag::PROP4,    IdentityTag::THM1,        IdentityTag::COR1,
      IdentityTag::COR2,     IdentityTag::THM2,        IdentityTag::REMARK_F,
      IdentityTag::REMARK_BETA, IdentityTag::NUM_JACKSON,
  };
  return tags;
}

std::string to_string(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::EQ1: return "EQ1";
    case IdentityTag::EQ6: return "EQ6";
    case IdentityTag::EQ7: return "EQ7";
    case IdentityTag::EQ8: return "EQ8";
    case IdentityTag::PROP2: return "PROP2";
    case IdentityTag::PROP3: return "PROP3";
    case IdentityTag::PROP4: return "PROP4";
    case IdentityTag::THM1: return "THM1";
    case IdentityTag::COR1: return "COR1";
    case IdentityTag::COR2: return "COR2";
    case IdentityTag::THM2: return "THM2";
    case IdentityTag::REMARK_F: return "REMARK_F";
    case IdentityTag::REMARK_BETA: return "REMARK_BETA";
    case IdentityTag::NUM_JACKSON: return "NUM_JACKSON";
  }
  std::abort();  // unreachable: all enumerators handled
}

IdentityTag identity_tag_from_string(const std::string& name) {
  for (IdentityTag tag : all_identity_tags())
    if (to_string(tag) == name) return tag;
  throw UsageError("unknown identity tag: " + name);
}

VerifyReport eq1_report(int n, const XPoly& candidate) {
  if (n < 0) throw UsageError("EQ1 requires n >= 0");
  const XPoly x = XPoly::monomial(1);
  const XPoly qx_plus_1{QRat(1), QRat::q_power(1)};
  IdentityParams p;
  p.n = n;
  return exact_report(
      IdentityTag::EQ1, p, jackson_integral(candidate, x, qx_plus_1),
      defining_rhs(n),
      "integral over [X, qX + 1] differs from (q - 1)X^{n+1} + X^n");
}

VerifyReport run_identity(IdentityTag tag, const IdentityParams& params) {
  IdentityParams p;
  switch (tag) {
    case IdentityTag::EQ1: {
      int n = require_n(params, tag, 0);
      return eq1_report(n, qbernoulli(n).poly);
    }
    case IdentityTag::EQ6:
      return check_eq6(require_n(params, tag, 0));
    case IdentityTag::EQ7:
      return check_eq7(require_n(params, tag, 0));
    case IdentityTag::EQ8: {
      int n = require_n(params, tag, 0);
      p.n = n;
      return exact_report(tag, p, beta_number(n), frozen_carlitz_number(n),
                          "beta_number differs from the frozen closed form");
    }
    case IdentityTag::PROP2: {
      int n = require_n(params, tag, 1);
      if (!params.N || *params.N < 1)
        throw UsageError("PROP2 requires parameter N >= 1");
      int N = *params.N;
      p.n = n;
      p.N = N;
      return exact_report(tag, p, QRat(n) * power_sum(n, N),
                          eval_at_integer(eta(n), N) - eta_number(n),
                          "n * power_sum(n, N) differs from the eta difference");
    }
    case IdentityTag::PROP3: {
      int n = require_n(params, tag, 1);
      p.n = n;
      return exact_report(
          tag, p, scaled_x_derivative(eta(n)),
          QExpPoly::monomial(1, QRat(n) / q_minus_1()) * beta(n - 1),
          "scaled derivative of eta differs from (n/(q-1)) Y beta(n-1)");
    }
    case IdentityTag::PROP4: {
      int n = require_n(params, tag, 0);
      p.n = n;
      const QBernoulliResult& b = qbernoulli(n);
      return exact_report(tag, p, b.poly.coeff(0), b.antiderivative.coeff(1),
                          "constant term differs from F'(0)");
    }
    case IdentityTag::THM1: {
      int n = require_n(params, tag, 0);
      p.n = n;
      QExpPoly rhs = (eta(n + 1) - QExpPoly(eta_number(n + 1))) *
                     QRat(Rational(1, n + 1));
      return exact_report(tag, p, from_xpoly(qbernoulli(n).antiderivative),
                          rhs,
                          "F([X]_q) differs from (eta(n+1) - eta_number(n+1))/(n+1)");
    }
    case IdentityTag::COR1: {
      int n = require_n(params, tag, 0);
      p.n = n;
      return exact_report(tag, p, beta_via_F(n), beta(n),
                          "F'([X]_q) differs from beta(n)");
    }
    case IdentityTag::COR2: {
      int n = require_n(params, tag, 0);
      p.n = n;
      return exact_report(tag, p, qbernoulli(n).number, beta_number(n),
                          "B number differs from the Carlitz number");
    }
    case IdentityTag::THM2:
      return check_thm2(require_n(params, tag, 0));
    case IdentityTag::REMARK_F: {
      int n = require_n(params, tag, 0);
      p.n = n;
      XPoly integral = jackson_integral(qbernoulli(n).poly, XPoly(),
                                        XPoly::monomial(1));
      return exact_report(tag, p, from_xpoly(classical_derivative(integral)),
                          beta(n),
                          "derivative of the integral of B differs from beta(n)");
    }
    case IdentityTag::REMARK_BETA: {
      int n = require_n(params, tag, 0);
      p.n = n;
      return exact_report(tag, p, beta_via_remark(n), beta(n),
                          "derivative of the integral of ((t-1)/(q-1))^n "
                          "differs from beta(n)");
    }
    case IdentityTag::NUM_JACKSON:
      return check_num_jackson(params);
  }
  std::abort();  // unreachable: all enumerators handled
}

NumericResult numeric_jackson(const XPoly& P, const NumericSample& sample) {
  if (sample.q0 <= Rational(0) || sample.q0 == Rational(1))
    throw UsageError("q0 must be positive and distinct from 1");
  if (sample.truncation < 1) throw UsageError("truncation must be >= 1");
  if (!(sample.tolerance > 0)) throw UsageError("tolerance must be positive");

  std::vector<double> coeffs;
  coeffs.reserve(static_cast<size_t>(std::max(P.degree(), 0)) + 1);
  for (int k = 0; k <= P.degree(); ++k)
    coeffs.push_back(P.coeff(k).eval(sample.q0).to_double());

  const double q = sample.q0.to_double();
  const double a = sample.a.to_double();
  const double b = sample.b.to_double();

  auto f = [&coeffs](double t) {
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * t + *it;
    return acc;
  };

  // Geometric tail estimate: past the truncation point every term is bounded
  // by |1 - q| |x| C r^n with r the branch ratio and C a bound for |f| on the
  // integration range; reject truncations whose tail could matter.
  const double xm = std::max(std::abs(a), std::abs(b));
  double bound_f = 0;
  double xp = 1;
  for (double c : coeffs) {
    bound_f += std::abs(c) * xp;
    xp *= xm;
  }
  const double r = q < 1 ? q : 1 / q;
  const double tail = std::abs(1 - q) * xm * bound_f *
                      std::pow(r, sample.truncation) / (1 - r);
  if (!(tail < sample.tolerance / 10))
    throw UsageError("truncation too small for the requested tolerance");

  // one-sided series from 0 to x on the branch q0 lies on
  auto series_from_zero = [&](double x) {
    if (x == 0) return 0.0;
    double sum = 0;
    if (q < 1) {
      double qn = 1;  // q^n, n = 0, 1, ...
      for (int n = 0; n < sample.truncation; ++n) {
        sum += qn * f(qn * x);
        qn *= q;
      }
      return (1 - q) * x * sum;
    }
    double qn = 1 / q;  // q^{-n}, n = 1, 2, ...
    for (int n = 1; n <= sample.truncation; ++n) {
      sum += qn * f(qn * x);
      qn /= q;
    }
    return (q - 1) * x * sum;
  };

  NumericResult result;
  result.series_value = series_from_zero(b) - series_from_zero(a);
  const XPoly closed = jackson_integral(P, XPoly(QRat(sample.a)),
                                        XPoly(QRat(sample.b)));
  result.closed_form_value = closed.coeff(0).eval(sample.q0).to_double();
  return result;
}

std::vector<VerifyReport> run_suite(int max_n, int max_N) {
  return run_suite(max_n, max_N, {});
}

std::vector<VerifyReport> run_suite(int max_n, int max_N,
                                    const std::vector<IdentityTag>& tags) {
  if (max_n < 0) throw UsageError("max_n must be >= 0");
  if (max_N < 1) throw UsageError("max_N must be >= 1");

  auto selected = [&tags](IdentityTag tag) {
    if (tags.empty()) return true;
    for (IdentityTag t : tags)
      if (t == tag) return true;
    return false;
  };

  std::vector<VerifyReport> reports;
  for (IdentityTag tag : all_identity_tags()) {
    if (!selected(tag)) continue;
    IdentityParams p;
    switch (tag) {
      case IdentityTag::EQ8:
        for (int n = 0; n <= std::min(max_n, 3); ++n) {
          p.n = n;
          reports.push_back(run_identity(tag, p));
        }
        break;
      case IdentityTag::PROP2:
        for (int n = 1; n <= std::max(max_n, 1); ++n)
          for (int N = 1; N <= max_N; ++N) {
            p.n = n;
            p.N = N;
            reports.push_back(run_identity(tag, p));
          }
        break;
      case IdentityTag::PROP3:
        for (int n = 1; n <= std::max(max_n, 1); ++n) {
          p.n = n;
          reports.push_back(run_identity(tag, p));
        }
        break;
      case IdentityTag::NUM_JACKSON:
        for (int degree = 0; degree <= 3; ++degree)
          for (const Rational& q0 : {Rational(1, 2), Rational(2)}) {
            p.degree = degree;
            p.q0 = q0;
            reports.push_back(run_identity(tag, p));
          }
        break;
      default:
        for (int n = 0; n <= max_n; ++n) {
          p.n = n;
          reports.push_back(run_identity(tag, p));
        }
        break;
    }
  }
  return reports;
}

SuiteSummary summarize(const std::vector<VerifyReport>& reports) {
  SuiteSummary s;
  s.total = static_cast<int>(reports.size());
  for (const auto& r : reports) (r.passed ? s.passed : s.failed)++;
  return s;
}

ojson report_to_json(const VerifyReport& report) {
  ojson j;
  j["identity"] = to_string(report.identity);
  ojson p = ojson::object();
  if (report.params.n) p["n"] = *report.params.n;
  if (report.params.N) p["N"] = *report.params.N;
  if (report.params.degree) p["degree"] = *report.params.degree;
  if (report.params.q0) p["q0"] = report.params.q0->fraction_str();
  j["params"] = p;
  j["passed"] = report.passed;
  if (!report.passed) {
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["detail"] = report.detail;
  }
  return j;
}

ojson summary_to_json(const SuiteSummary& summary, long long elapsed_ms) {
  ojson j;
  j["total"] = summary.total;
  j["passed"] = summary.passed;
  j["failed"] = summary.failed;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace qbern
