"""Exact q-Bernoulli polynomials built on the Jackson integral.

The heavy lifting lives in the compiled module ``qbern._core``; this package
adds small conveniences (JSON decoding of verification reports).
"""

from __future__ import annotations

import json as _json

from ._core import (
    ContradictionError,
    DomainError,
    PoleError,
    QBernoulliResult,
    QExpPoly,
    QRat,
    Rational,
    UsageError,
    XPoly,
    bernoulli_via_carlitz_expansion,
    beta,
    beta_number,
    beta_via_F,
    beta_via_remark,
    bracket,
    classical_antiderivative,
    classical_bernoulli,
    classical_derivative,
    eta,
    eta_number,
    eval_at_integer,
    from_xpoly,
    identity_tags,
    jackson_integral,
    limit_q_to_1,
    mixed_basis_expansion,
    numeric_jackson,
    power_sum,
    q_antiderivative,
    q_derivative,
    qbernoulli,
    scaled_x_derivative,
    substitute,
)
from ._core import run_identity_json as _run_identity_json
from ._core import run_suite_json as _run_suite_json

__all__ = [
    "ContradictionError",
    "DomainError",
    "PoleError",
    "QBernoulliResult",
    "QExpPoly",
    "QRat",
    "Rational",
    "UsageError",
    "XPoly",
    "bernoulli_via_carlitz_expansion",
    "beta",
    "beta_number",
    "beta_via_F",
    "beta_via_remark",
    "bracket",
    "classical_antiderivative",
    "classical_bernoulli",
    "classical_derivative",
    "eta",
    "eta_number",
    "eval_at_integer",
    "from_xpoly",
    "identity_tags",
    "jackson_integral",
    "limit_q_to_1",
    "mixed_basis_expansion",
    "numeric_jackson",
    "power_sum",
    "q_antiderivative",
    "q_derivative",
    "qbernoulli",
    "run_identity",
    "run_suite",
    "scaled_x_derivative",
    "substitute",
]


def run_identity(tag, n=None, N=None, degree=None, q0=None):
    """Check one identity instance; returns the report as a dict."""
    return _json.loads(_run_identity_json(tag, n=n, N=N, degree=degree, q0=q0))


def run_suite(max_n=8, max_N=6, tags=()):
    """Run the identity suite; returns (reports, summary) with dict reports."""
    reports = [_json.loads(line) for line in _run_suite_json(max_n, max_N, list(tags))]
    passed = sum(1 for r in reports if r["passed"])
    summary = {
        "total": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
    }
    return reports, summary
