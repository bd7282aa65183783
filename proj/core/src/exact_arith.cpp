#include "seqcheck/exact_arith.hpp"

#include <algorithm>
#include <ostream>

namespace seqcheck {

Integer::Integer(std::int64_t v) : v_(static_cast<long>(v)) {}

Integer::Integer(std::string_view decimal) {
  if (v_.set_str(std::string(decimal), 10) != 0) {
    throw std::invalid_argument("not a decimal integer: " + std::string(decimal));
  }
}

Integer Integer::pow(const Integer& base, std::uint64_t exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exp);
  return Integer(std::move(r));
}

Integer Integer::factorial(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Integer(std::move(r));
}

Integer Integer::pow2(std::uint64_t exp) {
  mpz_class r;
  mpz_setbit(r.get_mpz_t(), exp);
  return Integer(std::move(r));
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return Integer(std::move(r));
}

std::uint64_t Integer::trailing_zero_bits() const {
  if (is_zero()) return 0;
  return mpz_scan1(v_.get_mpz_t(), 0);
}

std::uint64_t Integer::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

bool Integer::fits_int64() const { return v_.fits_slong_p(); }

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return v_.get_si();
}

Integer Integer::divexact(const Integer& d) const {
  if (!divisible_by(d)) {
    throw InvariantViolation("inexact division: " + to_string() + " / " + d.to_string());
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return Integer(std::move(r));
}

bool Integer::divisible_by(const Integer& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
}

Integer Integer::quot(const Integer& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  mpz_class r;
  mpz_tdiv_q(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return Integer(std::move(r));
}

Integer Integer::rem(const Integer& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return Integer(std::move(r));
}

Integer Integer::shifted_left(std::uint64_t bits) const {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), v_.get_mpz_t(), bits);
  return Integer(std::move(r));
}

Integer Integer::shifted_right_exact(std::uint64_t bits) const {
  if (!is_zero() && trailing_zero_bits() < bits) {
    throw InvariantViolation("inexact shift of " + to_string() + " by " + std::to_string(bits));
  }
  mpz_class r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), v_.get_mpz_t(), bits);
  return Integer(std::move(r));
}

std::uint64_t Integer::remove_factor(const Integer& p) {
  if (p <= Integer(1)) throw std::invalid_argument("factor must be at least 2");
  if (is_zero()) throw std::domain_error("cannot remove factors from zero");
  return mpz_remove(v_.get_mpz_t(), v_.get_mpz_t(), p.v_.get_mpz_t());
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }

// Rational

Rational::Rational(Integer n, Integer d) {
  if (d.is_zero()) throw std::domain_error("rational with zero denominator");
  if (n.is_zero()) {
    num_ = Integer(0);
    den_ = Integer(1);
    return;
  }
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  const Integer g = Integer::gcd(n, d);
  num_ = n.divexact(g);
  den_ = d.divexact(g);
}

Rational Rational::abs() const { return Rational(num_.abs(), den_, Canonical{}); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(den_, num_);
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ + b.num_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ * b.num_);
  // Cross-reduce first so the canonicalizing gcd works on smaller operands.
  const Integer g1 = Integer::gcd(a.num_, b.den_);
  const Integer g2 = Integer::gcd(b.num_, a.den_);
  return Rational(a.num_.divexact(g1) * b.num_.divexact(g2), a.den_.divexact(g2) * b.den_.divexact(g1),
                  Rational::Canonical{});
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, Rational::Canonical{}); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

// DyadicRational

DyadicRational dyadic_normalize(const Integer& m, std::uint64_t e) {
  return DyadicRational(m, e);
}

DyadicRational::DyadicRational(Integer mantissa, std::uint64_t exponent) {
  if (mantissa.is_zero()) return;
  const std::uint64_t drop = std::min(mantissa.trailing_zero_bits(), exponent);
  mantissa_ = mantissa.shifted_right_exact(drop);
  exponent_ = exponent - drop;
}

DyadicRational DyadicRational::from_rational(const Rational& r) {
  const Integer& d = r.den();
  const std::uint64_t tz = d.trailing_zero_bits();
  if (d != Integer::pow2(tz)) {
    throw std::domain_error("denominator is not a power of two: " + r.to_string());
  }
  return DyadicRational(r.num(), tz);
}

Rational DyadicRational::to_rational() const { return Rational(mantissa_, Integer::pow2(exponent_)); }

DyadicRational DyadicRational::scaled_down(std::uint64_t k) const {
  if (mantissa_.is_zero()) return {};
  return DyadicRational(mantissa_, exponent_ + k);
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  const std::uint64_t e = std::max(a.exponent_, b.exponent_);
  return DyadicRational(a.mantissa_.shifted_left(e - a.exponent_) + b.mantissa_.shifted_left(e - b.exponent_), e);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  return a + DyadicRational(-b.mantissa_, b.exponent_);
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return DyadicRational(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

// Valuations and digit sums

namespace {

constexpr std::int64_t kTrialDivisionLimit = 1'000'000'000'000;

void require_prime(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + p.to_string());
}

}  // namespace

bool is_prime(const Integer& p) {
  if (p < Integer(2)) return false;
  if (p >= Integer(kTrialDivisionLimit)) {
    throw std::invalid_argument("prime check out of supported range: " + p.to_string());
  }
  const std::int64_t v = p.to_int64();
  if (v < 4) return true;
  if (v % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

std::int64_t val_p(const Integer& p, const Rational& x) {
  if (x.is_zero()) throw std::domain_error("valuation of zero undefined");
  require_prime(p);
  Integer num = x.num().abs();
  Integer den = x.den();
  const auto up = static_cast<std::int64_t>(num.remove_factor(p));
  const auto down = static_cast<std::int64_t>(den.remove_factor(p));
  return up - down;
}

std::int64_t digit_sum(const Integer& p, const Integer& n) {
  if (p < Integer(2) || !p.fits_int64()) throw std::invalid_argument("digit_sum base must be in [2, 2^63)");
  if (n < Integer(1)) throw std::domain_error("digit_sum requires a positive integer");
  if (p == Integer(2)) return static_cast<std::int64_t>(mpz_popcount(n.raw().get_mpz_t()));
  std::int64_t sum = 0;
  mpz_class rest = n.raw();
  mpz_class digit;
  while (rest != 0) {
    mpz_tdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), p.raw().get_mpz_t());
    sum += digit.get_si();
  }
  return sum;
}

Integer legendre_factorial_valuation(const Integer& p, const Integer& n) {
  require_prime(p);
  const Integer excess = n - Integer(digit_sum(p, n));
  const Integer step = p - Integer(1);
  if (!excess.divisible_by(step)) {
    throw InvariantViolation("Legendre numerator " + excess.to_string() + " not divisible by " + step.to_string());
  }
  return excess.divexact(step);
}

}  // namespace seqcheck
