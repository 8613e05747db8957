#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "qbern/bernoulli.hpp"
#include "qbern/json_io.hpp"
#include "qbern/render.hpp"
#include "qbern/verify.hpp"

namespace py = pybind11;

namespace {

using namespace qbern;

RenderOptions latex_options(bool bracket_notation) {
  return {TextStyle::latex, bracket_notation};
}

constexpr RenderOptions kPlain{TextStyle::plain, false};

template <class P>
void bind_poly_common(py::class_<P>& cls) {
  cls.def(py::init<>())
      .def(py::init<const QRat&>())
      .def(py::init<std::vector<QRat>>())
      .def_static("monomial", &P::monomial, py::arg("deg"),
                  py::arg("coeff") = QRat(1))
      .def_property_readonly("degree", &P::degree)
      .def("coeff", &P::coeff)
      .def("coefficients", &P::coefficients)
      .def("eval", &P::eval)
      .def("is_zero", &P::is_zero)
      .def("__eq__", [](const P& a, const P& b) { return a == b; },
           py::is_operator())
      .def("__add__", [](const P& a, const P& b) { return a + b; },
           py::is_operator())
      .def("__sub__", [](const P& a, const P& b) { return a - b; },
           py::is_operator())
      .def("__mul__", [](const P& a, const P& b) { return a * b; },
           py::is_operator())
      .def("__mul__", [](const P& a, const QRat& s) { return a * s; },
           py::is_operator())
      .def("__rmul__", [](const P& a, const QRat& s) { return a * s; },
           py::is_operator())
      .def("__neg__", [](const P& a) { return -a; }, py::is_operator());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact q-Bernoulli polynomials over Q(q)";

  py::register_exception<ContradictionError>(m, "ContradictionError",
                                             PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  auto domain_error =
      py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<PoleError>(m, "PoleError", domain_error.ptr());

  py::class_<Rational>(m, "Rational")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init(
          [](const std::string& s) { return Rational::from_string(s); }))
      .def("__str__", &Rational::str)
      .def("__repr__",
           [](const Rational& r) { return "Rational(\"" + r.str() + "\")"; })
      .def("fraction_str", &Rational::fraction_str)
      .def("__float__", &Rational::to_double)
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; },
           py::is_operator())
      .def("__add__", [](const Rational& a, const Rational& b) { return a + b; },
           py::is_operator())
      .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; },
           py::is_operator())
      .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; },
           py::is_operator())
      .def("__truediv__",
           [](const Rational& a, const Rational& b) { return a / b; },
           py::is_operator())
      .def("__neg__", [](const Rational& a) { return -a; }, py::is_operator());

  py::class_<QRat>(m, "QRat")
      .def(py::init<>())
      .def(py::init<int>())
      .def(py::init<const Rational&>())
      .def_static("q_power", &QRat::q_power, py::arg("k"))
      .def("__str__",
           [](const QRat& r) { return render_qrat(r, kPlain); })
      .def("__repr__",
           [](const QRat& r) {
             return "QRat(" + render_qrat(r, kPlain) + ")";
           })
      .def("latex",
           [](const QRat& r, bool bracket_notation) {
             return render_qrat(r, latex_options(bracket_notation));
           },
           py::arg("bracket_notation") = false)
      .def("json", [](const QRat& r) { return qrat_to_json(r).dump(); })
      .def_static("from_json",
                  [](const std::string& s) {
                    return qrat_from_json(ojson::parse(s, nullptr, true));
                  })
      .def("eval", &QRat::eval, py::arg("q0"))
      .def("limit_at_1", &QRat::limit_at_1)
      .def("is_canonical", &QRat::is_canonical)
      .def("is_zero", &QRat::is_zero)
      .def("__eq__", [](const QRat& a, const QRat& b) { return a == b; },
           py::is_operator())
      .def("__add__", [](const QRat& a, const QRat& b) { return a + b; },
           py::is_operator())
      .def("__sub__", [](const QRat& a, const QRat& b) { return a - b; },
           py::is_operator())
      .def("__mul__", [](const QRat& a, const QRat& b) { return a * b; },
           py::is_operator())
      .def("__truediv__", [](const QRat& a, const QRat& b) { return a / b; },
           py::is_operator())
      .def("__neg__", [](const QRat& a) { return -a; }, py::is_operator());

  m.def("bracket", &bracket, py::arg("n"),
        "the q-bracket [n]_q = 1 + q + ... + q^{n-1}");

  py::class_<XPoly> xpoly(m, "XPoly");
  bind_poly_common(xpoly);
  xpoly
      .def("__str__",
           [](const XPoly& p) { return render_xpoly(p, kPlain); })
      .def("latex",
           [](const XPoly& p, bool bracket_notation) {
             return render_xpoly(p, latex_options(bracket_notation));
           },
           py::arg("bracket_notation") = false)
      .def("json", [](const XPoly& p) { return xpoly_to_json(p).dump(); })
      .def_static("from_json", [](const std::string& s) {
        return xpoly_from_json(ojson::parse(s, nullptr, true));
      });

  py::class_<QExpPoly> qexppoly(m, "QExpPoly");
  bind_poly_common(qexppoly);
  qexppoly
      .def("__str__",
           [](const QExpPoly& p) { return render_qexppoly(p, kPlain); })
      .def("latex",
           [](const QExpPoly& p, bool bracket_notation) {
             return render_qexppoly(p, latex_options(bracket_notation));
           },
           py::arg("bracket_notation") = false)
      .def("json",
           [](const QExpPoly& p) { return qexppoly_to_json(p).dump(); })
      .def_static("from_json", [](const std::string& s) {
        return qexppoly_from_json(ojson::parse(s, nullptr, true));
      });

  py::class_<QBernoulliResult>(m, "QBernoulliResult")
      .def_readonly("n", &QBernoulliResult::n)
      .def_readonly("poly", &QBernoulliResult::poly)
      .def_readonly("antiderivative", &QBernoulliResult::antiderivative)
      .def_readonly("number", &QBernoulliResult::number);

  m.def("qbernoulli", [](int n) { return qbernoulli(n); }, py::arg("n"),
        "B_{n,q}(X) with its q-antiderivative and value at 0");
  m.def("classical_bernoulli", &classical_bernoulli, py::arg("n"));
  m.def("limit_q_to_1", &limit_q_to_1, py::arg("p"));
  m.def("bernoulli_via_carlitz_expansion", &bernoulli_via_carlitz_expansion,
        py::arg("n"));
  m.def("beta_via_F", &beta_via_F, py::arg("n"));
  m.def("beta_via_remark", &beta_via_remark, py::arg("n"));

  m.def("eta", &eta, py::arg("n"));
  m.def("beta", &beta, py::arg("n"));
  m.def("eta_number", &eta_number, py::arg("n"));
  m.def("beta_number", &beta_number, py::arg("n"));
  m.def("mixed_basis_expansion", &mixed_basis_expansion, py::arg("coeffs"),
        py::arg("n"));
  m.def("scaled_x_derivative", &scaled_x_derivative, py::arg("p"));
  m.def("from_xpoly", &from_xpoly, py::arg("p"));
  m.def("eval_at_integer", &eval_at_integer, py::arg("p"), py::arg("N"));
  m.def("power_sum", &power_sum, py::arg("n"), py::arg("N"));

  m.def("q_derivative", &q_derivative, py::arg("p"));
  m.def("q_antiderivative", &q_antiderivative, py::arg("p"));
  m.def("classical_derivative", &classical_derivative, py::arg("p"));
  m.def("classical_antiderivative", &classical_antiderivative, py::arg("p"));
  m.def("jackson_integral", &jackson_integral, py::arg("p"), py::arg("a"),
        py::arg("b"));
  m.def("substitute", &substitute, py::arg("p"), py::arg("s"));

  m.def("identity_tags", []() {
    std::vector<std::string> names;
    for (IdentityTag tag : all_identity_tags()) names.push_back(to_string(tag));
    return names;
  });
  m.def(
      "run_identity_json",
      [](const std::string& tag, std::optional<int> n, std::optional<int> N,
         std::optional<int> degree, std::optional<std::string> q0) {
        IdentityParams params;
        params.n = n;
        params.N = N;
        params.degree = degree;
        if (q0) params.q0 = Rational::from_string(*q0);
        return report_to_json(
                   run_identity(identity_tag_from_string(tag), params))
            .dump();
      },
      py::arg("tag"), py::arg("n") = std::nullopt, py::arg("N") = std::nullopt,
      py::arg("degree") = std::nullopt, py::arg("q0") = std::nullopt);
  m.def(
      "run_suite_json",
      [](int max_n, int max_N, const std::vector<std::string>& tags) {
        std::vector<IdentityTag> parsed;
        parsed.reserve(tags.size());
        for (const std::string& name : tags)
          parsed.push_back(identity_tag_from_string(name));
        std::vector<std::string> lines;
        for (const VerifyReport& report : run_suite(max_n, max_N, parsed))
          lines.push_back(report_to_json(report).dump());
        return lines;
      },
      py::arg("max_n") = 8, py::arg("max_N") = 6,
      py::arg("tags") = std::vector<std::string>{});
  m.def(
      "numeric_jackson",
      [](const XPoly& P, const std::string& q0, const std::string& a,
         const std::string& b, int truncation, double tolerance) {
        NumericSample sample;
        sample.q0 = Rational::from_string(q0);
        sample.a = Rational::from_string(a);
        sample.b = Rational::from_string(b);
        sample.truncation = truncation;
        sample.tolerance = tolerance;
        NumericResult values = numeric_jackson(P, sample);
        return py::make_tuple(values.series_value, values.closed_form_value);
      },
      py::arg("p"), py::arg("q0"), py::arg("a") = "0", py::arg("b") = "1",
      py::arg("truncation") = 200, py::arg("tolerance") = 1e-10);
}
