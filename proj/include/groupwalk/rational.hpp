#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>

#include "groupwalk/error.hpp"

namespace groupwalk {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Thin wrapper over GMP's mpq_class; every construction
/// path canonicalizes, so the invariant holds for all values.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw InvalidParameterError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidParameterError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "num" or "num/den" in base 10 (optional leading '-').
  static Rational parse(const std::string& text);

  /// The exact dyadic rational equal to the binary64 value x.
  static Rational from_double(double x);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  /// Canonical text form: "num" when the denominator is 1, else "num/den".
  std::string str() const { return v_.get_str(); }

  double to_double() const { return v_.get_d(); }

  /// max(bits of |numerator|, bits of denominator); the resource-guard measure.
  std::size_t bit_size() const {
    return std::max(mpz_sizeinbase(v_.get_num_mpz_t(), 2),
                    mpz_sizeinbase(v_.get_den_mpz_t(), 2));
  }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidParameterError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

 private:
  mpq_class v_;
};

}  // namespace groupwalk
