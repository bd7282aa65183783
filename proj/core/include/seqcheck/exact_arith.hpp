#pragma once

// Exact scalar types: arbitrary-precision Integer, canonical Rational and
// canonical DyadicRational, plus p-adic valuation and base-p digit sums.
//
// Every value is immutable once constructed and every operation returns a
// new canonical value, so values may be shared freely across threads.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seqcheck {

/// Thrown when an internal invariant that the math guarantees is broken.
/// Seeing one of these means a bug in the library, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit Integer(std::string_view decimal);
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  static Integer pow(const Integer& base, std::uint64_t exp);
  static Integer factorial(std::uint64_t n);
  static Integer pow2(std::uint64_t exp);
  static Integer gcd(const Integer& a, const Integer& b);

  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  [[nodiscard]] Integer abs() const { return Integer(mpz_class(::abs(v_))); }

  /// Number of trailing zero bits; zero has none by convention.
  [[nodiscard]] std::uint64_t trailing_zero_bits() const;
  [[nodiscard]] std::uint64_t bit_length() const;

  [[nodiscard]] bool fits_int64() const;
  /// Throws std::overflow_error when the value does not fit.
  [[nodiscard]] std::int64_t to_int64() const;

  [[nodiscard]] std::string to_string() const { return v_.get_str(10); }

  /// Exact division; throws InvariantViolation when `d` does not divide.
  [[nodiscard]] Integer divexact(const Integer& d) const;
  [[nodiscard]] bool divisible_by(const Integer& d) const;
  /// Truncating quotient and remainder (remainder carries the dividend's sign).
  [[nodiscard]] Integer quot(const Integer& d) const;
  [[nodiscard]] Integer rem(const Integer& d) const;

  [[nodiscard]] Integer shifted_left(std::uint64_t bits) const;
  /// Exact right shift; requires the shifted-out bits to be zero.
  [[nodiscard]] Integer shifted_right_exact(std::uint64_t bits) const;

  /// Removes every factor `p` and returns how many were removed.
  std::uint64_t remove_factor(const Integer& p);

  [[nodiscard]] const mpz_class& raw() const { return v_; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& x);

 private:
  mpz_class v_;
};

/// Canonical rational: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n) : num_(n), den_(1) {}         // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error for a zero denominator.
  Rational(Integer n, Integer d);

  [[nodiscard]] const Integer& num() const { return num_; }
  [[nodiscard]] const Integer& den() const { return den_; }
  [[nodiscard]] int sign() const { return num_.sign(); }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_integer() const { return den_ == Integer(1); }
  [[nodiscard]] Rational abs() const;
  /// Throws std::domain_error when zero.
  [[nodiscard]] Rational reciprocal() const;

  /// "num/den", or just "num" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  struct Canonical {};
  Rational(Integer n, Integer d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}

  Integer num_;
  Integer den_;
};

/// Value mantissa / 2^exponent with exponent >= 0. Canonical: the mantissa is
/// odd whenever the exponent is positive, and zero is the pair (0, 0).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(Integer mantissa, std::uint64_t exponent);

  /// Throws std::domain_error when the denominator is not a power of two.
  static DyadicRational from_rational(const Rational& r);

  [[nodiscard]] const Integer& mantissa() const { return mantissa_; }
  [[nodiscard]] std::uint64_t exponent() const { return exponent_; }
  [[nodiscard]] bool is_integer() const { return exponent_ == 0; }
  [[nodiscard]] Rational to_rational() const;

  /// Divides by 2^k.
  [[nodiscard]] DyadicRational scaled_down(std::uint64_t k) const;

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
  friend bool operator==(const DyadicRational& a, const DyadicRational& b) = default;

 private:
  Integer mantissa_;
  std::uint64_t exponent_ = 0;
};

/// Canonical dyadic rational with the same value as m / 2^e.
DyadicRational dyadic_normalize(const Integer& m, std::uint64_t e);

/// Deterministic trial-division primality test. Throws std::invalid_argument
/// for p >= 10^12, which is beyond what trial division is used for here.
bool is_prime(const Integer& p);

/// p-adic valuation of a nonzero rational: val(num) - val(den). Sign of x
/// is ignored. Throws std::domain_error for x = 0 and std::invalid_argument
/// when p is not prime.
std::int64_t val_p(const Integer& p, const Rational& x);

/// Sum of the base-p digits of n. Requires p >= 2 and n >= 1.
std::int64_t digit_sum(const Integer& p, const Integer& n);

/// Exponent of p in n! via (n - s_p(n)) / (p - 1).
Integer legendre_factorial_valuation(const Integer& p, const Integer& n);

}  // namespace seqcheck
