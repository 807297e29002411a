#include "fareylab/rational.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace fareylab {

void Rational::canonicalize() {
  if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  const auto slash = text.find('/');
  const std::string num_s(text.substr(0, slash));
  std::string den_s = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  mpz_class num, den;
  if (num_s.empty() || den_s.empty() || num.set_str(num_s, 10) != 0 || den.set_str(den_s, 10) != 0)
    throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
  if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  return Rational(num, den);
}

Rational Rational::from_coprime(mpz_class num, mpz_class den) {
  assert(den > 0);
  assert(gcd(num, den) == 1);
  mpq_class q;
  q.get_num() = std::move(num);
  q.get_den() = std::move(den);
  return Rational(std::move(q), AlreadyCanonical{});
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational::reciprocal of zero");
  mpq_class q;
  mpq_inv(q.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(q), AlreadyCanonical{});
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_), Rational::AlreadyCanonical{});
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += '/';
    s += v_.get_den().get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational mediant(const Rational& x, const Rational& y) {
  return Rational(x.num() + y.num(), x.den() + y.den());
}

bool unimodular(const Rational& x, const Rational& y) {
  const mpz_class cross = x.num() * y.den() - y.num() * x.den();
  return cross == 1 || cross == -1;
}

}  // namespace fareylab
