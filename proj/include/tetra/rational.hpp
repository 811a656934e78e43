#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar used on every recurrence/oracle path.
 *
 * Arbitrary-precision fraction, always canonical: denominator positive,
 * gcd(|num|, den) == 1, zero stored as 0/1. Arithmetic is exact and closed,
 * so equality of two computed values is a strict bitwise test.
 *
 * Decimal strings ("-0.5") are converted exactly by scaling with powers of
 * ten, never through binary floating point.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace tetra {

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts `[-+]?digits(/digits)?` or `[-+]?digits(.digits)?`.
  /// Throws std::invalid_argument on malformed text or zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rational reciprocal() const;

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  std::size_t num_bits() const { return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2); }
  std::size_t den_bits() const { return mpz_sizeinbase(q_.get_den().get_mpz_t(), 2); }

  double to_double() const { return q_.get_d(); }

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

 private:
  mpq_class q_;
};

}  // namespace tetra
