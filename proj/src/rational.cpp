#include "qbern/rational.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace qbern {

namespace {

void require_nonzero_den(const mpz_class& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  require_nonzero_den(v_.get_den());
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  require_nonzero_den(den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  // trim surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw UsageError("empty rational literal");

  std::string text(s);
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    if (text.find('/') != std::string::npos)
      throw UsageError("rational literal mixes '.' and '/': " + text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw UsageError("bad decimal literal: " + text);
    mpz_class num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw UsageError("bad decimal literal: " + text);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    return Rational(num, den);
  }

  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0)
    throw UsageError("bad rational literal: " + text);
  require_nonzero_den(v.get_den());
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(unsigned e) const {
  Rational r;
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return r;  // powers of a canonical fraction stay canonical
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::string Rational::fraction_str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<mpz_class> row(static_cast<size_t>(n) + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  return row[static_cast<size_t>(k)];
}

}  // namespace qbern
