#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seqcheck/exact_arith.hpp"

using namespace seqcheck;

namespace {

bool canonical(const Rational& r) {
  return r.den() > Integer(0) && Integer::gcd(r.num(), r.den()) == Integer(1) && (!r.is_zero() || r.den() == Integer(1));
}

// The exponent cannot go below zero, so even integers keep exponent 0.
bool canonical(const DyadicRational& d) {
  if (d.mantissa().is_zero()) return d.exponent() == 0;
  return d.mantissa().is_odd() || d.exponent() == 0;
}

}  // namespace

TEST_CASE("Integer basics") {
  const Integer big("123456789012345678901234567890");
  CHECK(big.to_string() == "123456789012345678901234567890");
  CHECK((big - big).is_zero());
  CHECK(Integer(0) == -Integer(0));
  CHECK(Integer(-7).abs() == Integer(7));
  CHECK(Integer::pow(Integer(3), 40).to_string() == "12157665459056928801");
  CHECK(Integer::pow2(70) == Integer::pow(Integer(2), 70));
  CHECK(Integer(48).trailing_zero_bits() == 4);
  CHECK(Integer(12).divexact(Integer(4)) == Integer(3));
  CHECK_THROWS_AS((void)Integer(13).divexact(Integer(4)), InvariantViolation);
  CHECK_THROWS_AS((void)Integer(5).quot(Integer(0)), std::domain_error);
  CHECK(Integer(-7).quot(Integer(2)) == Integer(-3));
  CHECK(Integer(-7).rem(Integer(2)) == Integer(-1));
  CHECK_THROWS_AS((void)Integer(5).shifted_right_exact(1), InvariantViolation);
  CHECK_THROWS_AS(Integer("12x"), std::invalid_argument);
  CHECK_THROWS_AS((void)Integer::pow2(80).to_int64(), std::overflow_error);
}

TEST_CASE("Rational canonical form") {
  CHECK(Rational(Integer(4), Integer(-6)).to_string() == "-2/3");
  CHECK(Rational(Integer(0), Integer(-5)).den() == Integer(1));
  CHECK(Rational(Integer(10), Integer(5)).to_string() == "2");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
  CHECK_THROWS_AS((void)Rational(0).reciprocal(), std::domain_error);
  CHECK(Rational(Integer(1), Integer(2)) + Rational(Integer(1), Integer(3)) == Rational(Integer(5), Integer(6)));
  CHECK(Rational(Integer(1), Integer(3)) < Rational(Integer(1), Integer(2)));
  CHECK(Rational(Integer(-1), Integer(2)).abs() == Rational(Integer(1), Integer(2)));
}

TEST_CASE("Rational arithmetic stays canonical") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = oracle::random_rational(rng, 1000, false);
    const Rational b = oracle::random_rational(rng);
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    CHECK(canonical(a / b));
    CHECK((a / b) * b == a);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("dyadic_normalize") {
  auto d = dyadic_normalize(Integer(4), 2);
  CHECK(d.mantissa() == Integer(1));
  CHECK(d.exponent() == 0);
  d = dyadic_normalize(Integer(0), 7);
  CHECK(d.mantissa() == Integer(0));
  CHECK(d.exponent() == 0);
  d = dyadic_normalize(Integer(6), 1);
  CHECK(d.mantissa() == Integer(3));
  CHECK(d.exponent() == 0);
  d = dyadic_normalize(Integer(6), 3);
  CHECK(d.mantissa() == Integer(3));
  CHECK(d.exponent() == 2);
  CHECK(dyadic_normalize(Integer(-8), 5).mantissa() == Integer(-1));
  CHECK(dyadic_normalize(Integer(12), 0).mantissa() == Integer(12));
}

TEST_CASE("DyadicRational round-trips through Rational and stays canonical") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> m(-100000, 100000);
  std::uniform_int_distribution<std::uint64_t> e(0, 40);
  for (int i = 0; i < 500; ++i) {
    const DyadicRational a(Integer(m(rng)), e(rng));
    const DyadicRational b(Integer(m(rng)), e(rng));
    REQUIRE(canonical(a));
    CHECK(DyadicRational::from_rational(a.to_rational()) == a);
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    CHECK((a + b).to_rational() == a.to_rational() + b.to_rational());
    CHECK((a * b).to_rational() == a.to_rational() * b.to_rational());
  }
  CHECK_THROWS_AS(DyadicRational::from_rational(Rational(Integer(1), Integer(3))), std::domain_error);
}

TEST_CASE("is_prime by trial division") {
  CHECK_FALSE(is_prime(Integer(0)));
  CHECK_FALSE(is_prime(Integer(1)));
  CHECK(is_prime(Integer(2)));
  CHECK(is_prime(Integer(3)));
  CHECK_FALSE(is_prime(Integer(4)));
  CHECK(is_prime(Integer(999983)));
  CHECK_FALSE(is_prime(Integer(999981)));
  CHECK_THROWS_AS(is_prime(Integer::pow(Integer(10), 13)), std::invalid_argument);
}

TEST_CASE("val_p examples") {
  CHECK(val_p(Integer(2), Rational(8)) == 3);
  CHECK(val_p(Integer(2), Rational(5)) == 0);
  // 15/2 = 3 * 5 / 2 factored by trial division.
  const std::int64_t expected = oracle::count_factor(15, 3) - oracle::count_factor(2, 3);
  CHECK(expected == 1);
  CHECK(val_p(Integer(3), Rational(Integer(15), Integer(2))) == expected);
  CHECK(val_p(Integer(2), Rational(Integer(3), Integer(40))) == -3);
  CHECK(val_p(Integer(2), Rational(-8)) == 3);
}

TEST_CASE("val_p errors") {
  CHECK_THROWS_WITH_AS(val_p(Integer(2), Rational(0)), "valuation of zero undefined", std::domain_error);
  CHECK_THROWS_AS(val_p(Integer(4), Rational(8)), std::invalid_argument);
  CHECK_THROWS_AS(val_p(Integer(1), Rational(8)), std::invalid_argument);
}

TEST_CASE("val_p is additive over products") {
  std::mt19937_64 rng(3);
  for (const std::int64_t p : {2, 3, 5, 7}) {
    const Integer prime(p);
    for (int i = 0; i < 200; ++i) {
      const Rational x = oracle::random_rational(rng);
      const Rational y = oracle::random_rational(rng);
      CHECK(val_p(prime, x * y) == val_p(prime, x) + val_p(prime, y));
    }
  }
}

TEST_CASE("digit_sum") {
  CHECK(digit_sum(Integer(2), Integer(5)) == 2);
  CHECK(digit_sum(Integer(2), Integer(12)) == 2);
  CHECK(digit_sum(Integer(3), Integer(2)) == 2);
  CHECK(digit_sum(Integer(10), Integer(9876)) == 30);
  CHECK(digit_sum(Integer(2), Integer::pow2(100) - Integer(1)) == 100);
  CHECK_THROWS_AS(digit_sum(Integer(2), Integer(0)), std::domain_error);
  CHECK_THROWS_AS(digit_sum(Integer(1), Integer(5)), std::invalid_argument);
}

TEST_CASE("legendre_factorial_valuation examples") {
  CHECK(legendre_factorial_valuation(Integer(2), Integer(1)) == Integer(0));
  CHECK(oracle::factorial_valuation(12, 2) == 10);
  CHECK(legendre_factorial_valuation(Integer(2), Integer(12)) == Integer(10));
  CHECK(oracle::factorial_valuation(9, 3) == 4);
  CHECK(legendre_factorial_valuation(Integer(3), Integer(9)) == Integer(4));
  CHECK_THROWS_AS(legendre_factorial_valuation(Integer(6), Integer(9)), std::invalid_argument);
}

TEST_CASE("Legendre agrees with direct factorial construction for n <= 2000") {
  for (const std::int64_t p : {2, 3, 5, 7}) {
    const Integer prime(p);
    Integer fact(1);
    for (std::int64_t n = 1; n <= 2000; ++n) {
      fact *= Integer(n);
      REQUIRE(legendre_factorial_valuation(prime, Integer(n)) == Integer(val_p(prime, Rational(fact))));
    }
  }
}
