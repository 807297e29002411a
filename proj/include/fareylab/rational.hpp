#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fareylab {

/// Exact rational over arbitrary-precision integers, always reduced,
/// denominator >= 1. Immutable value type; all arithmetic exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long num, long den) : v_(num, den) { canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(long n) : v_(n) {}
  explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

  // Parses "p/q" or "p". Throws std::invalid_argument on malformed input
  // or zero denominator.
  static Rational parse(std::string_view text);

  // Constructs from a numerator/denominator pair known to be coprime with
  // den > 0. Skips the gcd; checked in debug builds.
  static Rational from_coprime(mpz_class num, mpz_class den);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_), AlreadyCanonical{}); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), AlreadyCanonical{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), AlreadyCanonical{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), AlreadyCanonical{});
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct AlreadyCanonical {};
  Rational(mpq_class q, AlreadyCanonical) : v_(std::move(q)) {}
  void canonicalize();

  mpq_class v_;
};

// (p+r)/(q+s), reduced. For Stern-Brocot / Farey neighbors the result is
// automatically in lowest terms; general inputs are reduced on construction.
Rational mediant(const Rational& x, const Rational& y);

// |p*s - r*q| == 1 for x = p/q, y = r/s.
bool unimodular(const Rational& x, const Rational& y);

}  // namespace fareylab
