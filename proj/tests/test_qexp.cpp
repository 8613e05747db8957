#include <doctest.h>

#include <cstdint>
#include <vector>

#include "qbern/qexp.hpp"

using qbern::beta;
using qbern::beta_number;
using qbern::bracket;
using qbern::bracket_of_x;
using qbern::eta;
using qbern::eta_number;
using qbern::eval_at_integer;
using qbern::from_xpoly;
using qbern::mixed_basis_expansion;
using qbern::power_sum;
using qbern::QExpPoly;
using qbern::QPoly;
using qbern::QRat;
using qbern::Rational;
using qbern::scaled_x_derivative;
using qbern::UsageError;
using qbern::XPoly;

namespace {

const QRat q_minus_1 = QRat(QPoly{-1, 1});

struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  XPoly poly(int max_deg) {
    std::vector<QRat> c;
    int deg = range(0, max_deg);
    for (int i = 0; i <= deg; ++i)
      c.push_back(QRat(Rational(range(-4, 4), range(1, 3))));
    return XPoly(std::move(c));
  }
};

}  // namespace

TEST_SUITE("qexp") {

TEST_CASE("[X]_q as a polynomial in Y") {
  QExpPoly b = bracket_of_x();
  CHECK(b.degree() == 1);
  CHECK(b.coeff(0) == -q_minus_1.reciprocal());
  CHECK(b.coeff(1) == q_minus_1.reciprocal());
  // at X = N it evaluates to [N]_q
  for (int N = 0; N <= 6; ++N)
    CHECK(eval_at_integer(b, N) == bracket(N));
}

TEST_CASE("frozen eta values") {
  CHECK(eta(0) == QExpPoly(QRat(1)));
  // eta(1) = (Y - 1)/(q - 1) = [X]_q
  CHECK(eta(1) == bracket_of_x());
  // eta(2) = (q-1)^{-2} (1 - 2Y + (2/(q+1)) Y^2)
  QRat f = (q_minus_1 * q_minus_1).reciprocal();
  QExpPoly expected{f, QRat(-2) * f, QRat(2) / (QRat(QPoly{1, 1})) * f};
  CHECK(eta(2) == expected);
  CHECK(eta_number(0) == QRat(1));
  CHECK(eta_number(1).is_zero());
}

TEST_CASE("frozen Carlitz numbers") {
  CHECK(beta_number(0) == QRat(1));
  CHECK(beta_number(1) == QRat(-1) / bracket(2));
  CHECK(beta_number(2) == QRat::q_power(1) / (bracket(2) * bracket(3)));
  CHECK(beta_number(3) ==
        -(QRat::q_power(1) * q_minus_1) / (bracket(3) * bracket(4)));
}

TEST_CASE("beta(0) and beta(1)") {
  CHECK(beta(0) == QExpPoly(QRat(1)));
  // beta(1) = (q-1)^{-1} (-1 + (2/[2]_q) Y) per the defining sum
  QRat inv = q_minus_1.reciprocal();
  QExpPoly expected{QRat(-1) * inv, QRat(2) / bracket(2) * inv};
  CHECK(beta(1) == expected);
  CHECK(beta(1).eval(QRat(1)) == beta_number(1));
}

TEST_CASE("mixed basis expansion reproduces eta and beta") {
  for (int n = 0; n <= 8; ++n) {
    std::vector<QRat> eta_numbers, beta_numbers;
    for (int k = 0; k <= n; ++k) {
      eta_numbers.push_back(eta_number(k));
      beta_numbers.push_back(beta_number(k));
    }
    CHECK(mixed_basis_expansion(eta_numbers, n) == eta(n));
    CHECK(mixed_basis_expansion(beta_numbers, n) == beta(n));
  }
}

TEST_CASE("mixed basis expansion validates the length") {
  CHECK_THROWS_AS(mixed_basis_expansion({QRat(1)}, 2), UsageError);
}

TEST_CASE("scaled derivative acts on exponents") {
  QExpPoly p{QRat(3), QRat(5), QRat(7)};
  // Y^k -> k Y^k
  CHECK(scaled_x_derivative(p) == QExpPoly{QRat(0), QRat(5), QRat(14)});
  CHECK(scaled_x_derivative(QExpPoly(QRat(9))).is_zero());
}

TEST_CASE("from_xpoly is a ring homomorphism") {
  Lcg rng(77);
  for (int i = 0; i < 20; ++i) {
    XPoly p = rng.poly(4);
    XPoly r = rng.poly(4);
    CHECK(from_xpoly(p + r) == from_xpoly(p) + from_xpoly(r));
    CHECK(from_xpoly(p * r) == from_xpoly(p) * from_xpoly(r));
  }
  CHECK(from_xpoly(XPoly::monomial(1)) == bracket_of_x());
}

TEST_CASE("from_xpoly commutes with evaluation at integers") {
  Lcg rng(78);
  for (int i = 0; i < 10; ++i) {
    XPoly p = rng.poly(4);
    for (int N = 0; N <= 4; ++N)
      CHECK(eval_at_integer(from_xpoly(p), N) == p.eval(bracket(N)));
  }
}

TEST_CASE("power sums") {
  // sum_{k=0}^{N-1} q^k [k]_q^{n-1}
  CHECK(power_sum(2, 3) == QRat(QPoly{0, 1, 1, 1}));  // q + q^2 + q^3
  CHECK(power_sum(1, 1) == QRat(1));
  CHECK(power_sum(1, 4) == QRat(1) + QRat::q_power(1) + QRat::q_power(2) +
                               QRat::q_power(3));
  CHECK(power_sum(3, 1).is_zero());
  CHECK_THROWS_AS(power_sum(0, 3), UsageError);
  CHECK_THROWS_AS(power_sum(2, 0), UsageError);
}

TEST_CASE("power sum matches direct summation") {
  for (int n = 1; n <= 5; ++n)
    for (int N = 1; N <= 6; ++N) {
      QRat direct;
      for (int k = 0; k < N; ++k)
        direct += QRat::q_power(k) * bracket(k).pow(static_cast<unsigned>(n - 1));
      CHECK(power_sum(n, N) == direct);
    }
}

}  // TEST_SUITE
