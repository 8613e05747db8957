import pytest

qbern = pytest.importorskip("qbern")


def test_first_polynomials():
    assert str(qbern.qbernoulli(0).poly) == "1"
    assert str(qbern.qbernoulli(1).poly) == "X - 1/(q + 1)"
    b1 = qbern.qbernoulli(1)
    assert b1.number == qbern.QRat(-1) / qbern.bracket(2)
    assert b1.poly.coeff(0) == b1.number


def test_numbers_match_carlitz():
    for n in range(9):
        assert qbern.qbernoulli(n).number == qbern.beta_number(n)


def test_rational_arithmetic():
    half = qbern.Rational("1/2")
    assert float(half + half) == 1.0
    assert str(qbern.Rational(-3) / qbern.Rational(6)) == "-1/2"


def test_json_round_trip():
    p = qbern.qbernoulli(2).poly
    assert qbern.XPoly.from_json(p.json()) == p


def test_limit_and_classical():
    assert qbern.limit_q_to_1(qbern.qbernoulli(2).poly) == qbern.classical_bernoulli(2)


def test_run_identity():
    report = qbern.run_identity("PROP2", n=2, N=3)
    assert report["passed"] is True
    assert report["params"] == {"n": 2, "N": 3}


def test_run_suite():
    reports, summary = qbern.run_suite(2, 2)
    assert summary["failed"] == 0
    assert summary["total"] == len(reports) > 0


def test_numeric_jackson():
    series, closed = qbern.numeric_jackson(qbern.XPoly.monomial(2), "1/2")
    assert abs(closed - 4.0 / 7.0) < 1e-14
    assert abs(series - closed) < 1e-10


def test_exception_mapping():
    with pytest.raises(ValueError):
        qbern.bracket(-1)
    with pytest.raises(ValueError):
        qbern.run_identity("BOGUS")
    one_over_q_minus_1 = qbern.QRat(1) / (qbern.QRat.q_power(1) - qbern.QRat(1))
    with pytest.raises(ArithmeticError):
        qbern.limit_q_to_1(qbern.XPoly([one_over_q_minus_1]))
