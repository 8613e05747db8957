#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbern/bernoulli.hpp"
#include "qbern/json_io.hpp"
#include "qbern/render.hpp"
#include "qbern/verify.hpp"

namespace {

using namespace qbern;

enum class Format { json, latex, csv, plain };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  if (name == "csv") return Format::csv;
  if (name == "plain") return Format::plain;
  throw UsageError("unknown format: " + name);
}

RenderOptions render_options(Format format, bool bracket_notation) {
  RenderOptions opt;
  opt.style = format == Format::latex ? TextStyle::latex : TextStyle::plain;
  opt.bracket_notation = bracket_notation;
  return opt;
}

// Cap on n: default 12, overridden by QBERN_MAX_N, overridden by the flag.
int effective_cap(std::optional<int> flag_cap) {
  int cap = 12;
  if (const char* env = std::getenv("QBERN_MAX_N")) {
    try {
      size_t used = 0;
      std::string text(env);
      cap = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw UsageError("QBERN_MAX_N must be an integer, got: " +
                       std::string(env));
    }
  }
  if (flag_cap) cap = *flag_cap;
  if (cap < 0) throw UsageError("the n cap must be >= 0");
  if (cap > 20)
    std::cerr << "warning: cap " << cap
              << " is above 20; expect noticeably slower runs\n";
  return cap;
}

void check_cap(int n, std::optional<int> flag_cap, const char* what) {
  int cap = effective_cap(flag_cap);
  if (n > cap)
    throw UsageError(std::string(what) + " " + std::to_string(n) +
                     " exceeds the cap " + std::to_string(cap) +
                     " (raise with --max-n-cap or QBERN_MAX_N)");
}

struct ComputeArgs {
  int n = 0;
  std::string what = "bpoly";
  std::string format = "json";
  bool bracket_notation = false;
  std::optional<int> cap;
};

int cmd_compute(const ComputeArgs& args) {
  if (args.n < 0) throw UsageError("--n must be >= 0");
  check_cap(args.n, args.cap, "--n");
  const Format format = parse_format(args.format);
  const RenderOptions opt = render_options(format, args.bracket_notation);

  ojson as_json;
  std::string rendered;
  if (args.what == "bpoly" || args.what == "fpoly") {
    const QBernoulliResult& b = qbernoulli(args.n);
    const XPoly& p = args.what == "bpoly" ? b.poly : b.antiderivative;
    as_json = xpoly_to_json(p);
    rendered = render_xpoly(p, opt);
  } else if (args.what == "bnumber") {
    const QRat& v = qbernoulli(args.n).number;
    as_json = qrat_to_json(v);
    rendered = render_qrat(v, opt);
  } else if (args.what == "eta" || args.what == "beta") {
    QExpPoly p = args.what == "eta" ? eta(args.n) : beta(args.n);
    as_json = qexppoly_to_json(p);
    rendered = render_qexppoly(p, opt);
  } else if (args.what == "classical" || args.what == "limit") {
    XPoly p = args.what == "classical"
                  ? classical_bernoulli(args.n)
                  : limit_q_to_1(qbernoulli(args.n).poly);
    as_json = ratpoly_to_json(p);
    rendered = render_ratpoly(p, opt);
  } else {
    throw UsageError("unknown --what value: " + args.what);
  }

  switch (format) {
    case Format::json:
      std::cout << as_json.dump() << "\n";
      break;
    case Format::csv:
      std::cout << "n,what,value\n"
                << args.n << "," << args.what << "," << csv_quote(rendered)
                << "\n";
      break;
    case Format::latex:
    case Format::plain:
      std::cout << rendered << "\n";
      break;
  }
  return 0;
}

struct TableArgs {
  int max_n = 0;
  std::string format = "json";
  bool bracket_notation = false;
  std::optional<int> cap;
};

struct TableRow {
  int n;
  XPoly bpoly;
  QRat bnumber;
  QRat beta_number_value;
  XPoly limit;
};

int cmd_table(const TableArgs& args) {
  if (args.max_n < 0) throw UsageError("--max-n must be >= 0");
  check_cap(args.max_n, args.cap, "--max-n");
  const Format format = parse_format(args.format);
  const RenderOptions opt = render_options(format, args.bracket_notation);

  std::vector<TableRow> rows;
  rows.reserve(static_cast<size_t>(args.max_n) + 1);
  for (int n = 0; n <= args.max_n; ++n) {
    const QBernoulliResult& b = qbernoulli(n);
    rows.push_back(
        {n, b.poly, b.number, beta_number(n), limit_q_to_1(b.poly)});
  }

  switch (format) {
    case Format::json:
      for (const TableRow& row : rows) {
        ojson j;
        j["n"] = row.n;
        j["bpoly"] = xpoly_to_json(row.bpoly);
        j["bnumber"] = qrat_to_json(row.bnumber);
        j["beta"] = qrat_to_json(row.beta_number_value);
        j["limit"] = ratpoly_to_json(row.limit);
        std::cout << j.dump() << "\n";
      }
      break;
    case Format::csv:
      std::cout << "n,bpoly,bnumber,beta,limit\n";
      for (const TableRow& row : rows)
        std::cout << row.n << "," << csv_quote(render_xpoly(row.bpoly, opt))
                  << "," << csv_quote(render_qrat(row.bnumber, opt)) << ","
                  << csv_quote(render_qrat(row.beta_number_value, opt)) << ","
                  << csv_quote(render_ratpoly(row.limit, opt)) << "\n";
      break;
    case Format::latex:
      std::cout << "\\begin{tabular}{lllll}\n"
                << "$n$ & $B_{n,q}(X)$ & $B_{n,q}$ & $\\beta_{n,q}$ & "
                   "$\\lim_{q \\to 1} B_{n,q}(X)$ \\\\\n\\hline\n";
      for (const TableRow& row : rows)
        std::cout << row.n << " & $" << render_xpoly(row.bpoly, opt) << "$ & $"
                  << render_qrat(row.bnumber, opt) << "$ & $"
                  << render_qrat(row.beta_number_value, opt) << "$ & $"
                  << render_ratpoly(row.limit, opt) << "$ \\\\\n";
      std::cout << "\\end{tabular}\n";
      break;
    case Format::plain:
      for (const TableRow& row : rows) {
        std::cout << "n = " << row.n << "\n"
                  << "  B poly: " << render_xpoly(row.bpoly, opt) << "\n"
                  << "  B number: " << render_qrat(row.bnumber, opt) << "\n"
                  << "  beta number: "
                  << render_qrat(row.beta_number_value, opt) << "\n"
                  << "  limit: " << render_ratpoly(row.limit, opt) << "\n";
      }
      break;
  }
  return 0;
}

struct VerifyArgs {
  int max_n = 8;
  int max_N = 6;
  std::vector<std::string> tags;
  std::string format = "json";
};

int cmd_verify(const VerifyArgs& args) {
  const Format format = parse_format(args.format);
  if (format != Format::json && format != Format::plain)
    throw UsageError("verify emits json or plain reports");

  std::vector<IdentityTag> tags;
  tags.reserve(args.tags.size());
  for (const std::string& name : args.tags)
    tags.push_back(identity_tag_from_string(name));

  const auto start = std::chrono::steady_clock::now();
  std::vector<VerifyReport> reports = run_suite(args.max_n, args.max_N, tags);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  const SuiteSummary summary = summarize(reports);

  if (format == Format::json) {
    for (const VerifyReport& report : reports)
      std::cout << report_to_json(report).dump() << "\n";
    std::cout << summary_to_json(summary, elapsed).dump() << "\n";
  } else {
    for (const VerifyReport& report : reports) {
      std::cout << (report.passed ? "[PASS] " : "[FAIL] ")
                << report_to_json(report)["identity"].get<std::string>();
      const ojson params = report_to_json(report)["params"];
      for (auto it = params.begin(); it != params.end(); ++it)
        std::cout << " " << it.key() << "=" << it.value().dump();
      if (!report.passed)
        std::cout << "\n       lhs: " << report.lhs
                  << "\n       rhs: " << report.rhs << "\n       "
                  << report.detail;
      std::cout << "\n";
    }
    std::cout << "total=" << summary.total << " passed=" << summary.passed
              << " failed=" << summary.failed << " elapsed_ms=" << elapsed
              << "\n";
  }
  return summary.failed == 0 ? 0 : 1;
}

struct NumcheckArgs {
  std::string q = "1/2";
  int truncation = 200;
  double tolerance = 1e-10;
};

int cmd_numcheck(const NumcheckArgs& args) {
  NumericSample sample;
  sample.q0 = Rational::from_string(args.q);
  sample.a = Rational(0);
  sample.b = Rational(1);
  sample.truncation = args.truncation;
  sample.tolerance = args.tolerance;

  int failed = 0;
  for (int degree = 0; degree <= 3; ++degree) {
    NumericResult values = numeric_jackson(XPoly::monomial(degree), sample);
    const double err =
        std::abs(values.series_value - values.closed_form_value);
    const bool ok = err <= sample.tolerance;
    if (!ok) ++failed;
    ojson j;
    j["degree"] = degree;
    j["q0"] = sample.q0.fraction_str();
    j["series"] = values.series_value;
    j["closed_form"] = values.closed_form_value;
    j["abs_error"] = err;
    j["passed"] = ok;
    std::cout << j.dump() << "\n";
  }
  ojson summary;
  summary["total"] = 4;
  summary["passed"] = 4 - failed;
  summary["failed"] = failed;
  std::cout << summary.dump() << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-Bernoulli polynomials via the Jackson integral"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"json", "latex", "csv", "plain"};
  const auto format_check = CLI::IsMember(formats);

  ComputeArgs compute;
  CLI::App* compute_cmd =
      app.add_subcommand("compute", "compute one object for a given n");
  compute_cmd->add_option("--n", compute.n, "index n")->required();
  compute_cmd
      ->add_option("--what", compute.what,
                   "bpoly|fpoly|bnumber|eta|beta|classical|limit")
      ->check(CLI::IsMember({"bpoly", "fpoly", "bnumber", "eta", "beta",
                             "classical", "limit"}));
  compute_cmd->add_option("--format", compute.format, "output format")
      ->check(format_check);
  compute_cmd->add_flag("--bracket-notation", compute.bracket_notation,
                        "fold denominators into q-bracket products");
  compute_cmd->add_option("--max-n-cap", compute.cap, "override the n cap");

  TableArgs table;
  CLI::App* table_cmd =
      app.add_subcommand("table", "emit rows n = 0..max-n");
  table_cmd->add_option("--max-n", table.max_n, "largest n")->required();
  table_cmd->add_option("--format", table.format, "output format")
      ->check(format_check);
  table_cmd->add_flag("--bracket-notation", table.bracket_notation,
                      "fold denominators into q-bracket products");
  table_cmd->add_option("--max-n-cap", table.cap, "override the n cap");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the identity suite");
  verify_cmd->add_option("--max-n", verify.max_n, "largest n (default 8)");
  verify_cmd->add_option("--max-N", verify.max_N,
                         "largest evaluation point N (default 6)");
  verify_cmd->add_option("--tags", verify.tags,
                         "comma-separated identity tags")
      ->delimiter(',');
  verify_cmd->add_option("--format", verify.format, "json or plain")
      ->check(format_check);

  NumcheckArgs numcheck;
  CLI::App* numcheck_cmd = app.add_subcommand(
      "numcheck", "numeric Jackson-series cross-check at a given q");
  numcheck_cmd->add_option("--q", numcheck.q, "value of q (rational, not 1)")
      ->required();
  numcheck_cmd->add_option("--truncation", numcheck.truncation,
                           "series terms (default 200)");
  numcheck_cmd->add_option("--tolerance", numcheck.tolerance,
                           "absolute tolerance (default 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute_cmd->parsed()) return cmd_compute(compute);
    if (table_cmd->parsed()) return cmd_table(table);
    if (verify_cmd->parsed()) return cmd_verify(verify);
    if (numcheck_cmd->parsed()) return cmd_numcheck(numcheck);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContradictionError& e) {
    std::cerr << "internal contradiction: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
