#include <doctest.h>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "seqcheck/combinatorics.hpp"

using namespace seqcheck;

TEST_CASE("factorial") {
  CHECK(factorial(0) == Integer(1));
  CHECK(factorial(5) == Integer(120));
  CHECK(oracle::iterated_factorial(12) == Integer(479001600));
  CHECK(factorial(12) == oracle::iterated_factorial(12));
  CHECK(factorial(60) == oracle::iterated_factorial(60));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("stirling1 examples") {
  CHECK(stirling1(4, 4) == Integer(1));
  CHECK(stirling1(5, 1) == Integer(24));
  CHECK(oracle::falling_factorial_poly(4)[2] == Integer(11));
  CHECK(stirling1(4, 2) == Integer(11));
  CHECK(stirling1(0, 0) == Integer(1));
  CHECK(stirling1(3, 0) == Integer(0));
}

TEST_CASE("stirling2 examples") {
  CHECK(stirling2(4, 4) == Integer(1));
  CHECK(oracle::count_set_partitions(3, 2) == 3);
  CHECK(stirling2(3, 2) == Integer(3));
  CHECK(oracle::count_set_partitions(4, 2) == 7);
  CHECK(stirling2(4, 2) == Integer(7));
}

TEST_CASE("Stirling argument errors") {
  CHECK_THROWS_AS(stirling1(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(stirling1(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(stirling2(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(orthogonality_sum(2, 3), std::invalid_argument);
  const StirlingFirstTable t(5);
  CHECK_THROWS_AS((void)t.at(6, 0), std::out_of_range);
  CHECK(t.at(3, 5) == Integer(0));
}

TEST_CASE("StirlingFirstTable matches the falling factorial for n <= 40") {
  const StirlingFirstTable table(40);
  for (int n = 1; n <= 40; ++n) {
    const auto poly = oracle::falling_factorial_poly(n);
    for (int k = 0; k <= n; ++k) REQUIRE(table.at(n, k) == poly[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("StirlingFirstTable structure") {
  const StirlingFirstTable table(60);
  CHECK(table.at(0, 0) == Integer(1));
  for (std::size_t n = 1; n <= 60; ++n) {
    CHECK(table.at(n, 0) == Integer(0));
    Integer closed = factorial(static_cast<std::int64_t>(n - 1));
    if (n % 2 == 0) closed = -closed;
    CHECK(table.at(n, 1) == closed);
    for (std::size_t k = 0; k <= n; ++k) {
      const Integer& v = table.at(n, k);
      CHECK((v.is_zero() || v.sign() == ((n + k) % 2 == 0 ? 1 : -1)));
    }
  }
}

TEST_CASE("StirlingSecondTable matches set partition counts") {
  const StirlingSecondTable table(9);
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      REQUIRE(table.at(n, k) == Integer(oracle::count_set_partitions(n, k)));
    }
  }
}

TEST_CASE("tables grow append-only") {
  StirlingSecondTable table(5);
  const Integer before = table.at(5, 3);
  table.extend_to(20);
  CHECK(table.max_row() == 20);
  CHECK(table.at(5, 3) == before);
  table.extend_to(10);
  CHECK(table.max_row() == 20);
}

TEST_CASE("shared Stirling queries are safe from several threads") {
  std::vector<std::thread> workers;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([t, &ok] {
      bool good = true;
      for (int n = 0; n <= 50 + 5 * t; ++n) good = good && stirling2(n, n) == Integer(1);
      good = good && stirling1(30 + t, 1).sign() == ((30 + t) % 2 == 1 ? 1 : -1);
      ok[static_cast<std::size_t>(t)] = good ? 1 : 0;
    });
  }
  for (auto& w : workers) w.join();
  for (int v : ok) CHECK(v == 1);
}

TEST_CASE("genocchi_egf_recurrence examples") {
  const auto g = genocchi_egf_recurrence(8);
  CHECK(g.algorithm == GenocchiAlgorithm::EgfRecurrence);
  CHECK(g[0] == Integer(0));
  CHECK(g[1] == Integer(1));
  CHECK(g[5] == Integer(0));
  // Oracle: the same convolution, with the halving done in Rational.
  std::vector<Rational> r;
  for (int n = 0; n <= 6; ++n) {
    Rational acc(n == 1 ? 2 : 0);
    Integer binom(1);
    for (int k = 0; k < n; ++k) {
      acc -= Rational(binom) * r[static_cast<std::size_t>(k)];
      binom = (binom * Integer(n - k)).divexact(Integer(k + 1));
    }
    r.push_back(acc / Rational(2));
  }
  CHECK(r[6] == Rational(-3));
  CHECK(g[6] == Integer(-3));
  CHECK_THROWS_AS(genocchi_egf_recurrence(-1), std::invalid_argument);
}

TEST_CASE("genocchi_seidel examples") {
  const auto g = genocchi_seidel(8);
  CHECK(g.algorithm == GenocchiAlgorithm::Seidel);
  CHECK(g[2] == Integer(-1));
  CHECK(g[8] == Integer(17));
  CHECK(g[3] == Integer(0));
  CHECK(genocchi_seidel(0).values == std::vector<Integer>{Integer(0)});
  CHECK(genocchi_seidel(1).values == std::vector<Integer>{Integer(0), Integer(1)});
}

TEST_CASE("both Genocchi algorithms agree with each other and with Bernoulli numbers for n <= 60") {
  const auto egf = genocchi_egf_recurrence(60);
  const auto seidel = genocchi_seidel(60);
  const auto bern = oracle::genocchi_via_bernoulli(60);
  for (std::size_t n = 0; n <= 60; ++n) {
    REQUIRE(egf[n] == seidel[n]);
    REQUIRE(egf[n] == bern[n]);
  }
}

TEST_CASE("Genocchi zero and sign pattern for n <= 60") {
  const auto g = genocchi_seidel(60);
  CHECK(g[0] == Integer(0));
  CHECK(g[1] == Integer(1));
  for (std::size_t n = 3; n <= 60; n += 2) CHECK(g[n] == Integer(0));
  for (std::size_t l = 1; 2 * l <= 60; ++l) CHECK(g[2 * l].sign() == (l % 2 == 0 ? 1 : -1));
}

TEST_CASE("orthogonality_sum examples") {
  CHECK(orthogonality_sum(3, 3) == Integer(1));
  CHECK(orthogonality_sum(4, 2) == Integer(0));
  CHECK(orthogonality_sum(5, 1) == Integer(0));
  CHECK(orthogonality_sum(4, 2, SummationOrder::SecondThenFirst) == Integer(0));
}

TEST_CASE("orthogonality in both orders for n <= 40") {
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Integer delta(n == k ? 1 : 0);
      REQUIRE(orthogonality_sum(n, k, SummationOrder::FirstThenSecond) == delta);
      REQUIRE(orthogonality_sum(n, k, SummationOrder::SecondThenFirst) == delta);
    }
  }
}

TEST_CASE("stirling transform pair") {
  std::vector<Integer> unit(10, Integer(0));
  unit[0] = Integer(1);
  CHECK(stirling_transform(unit) == unit);
  CHECK(stirling_transform(std::vector<Integer>{}).empty());

  // u_n = (-1)^(n-1) a_n from the reference values maps onto the Genocchi numbers.
  const std::vector<std::int64_t> a{0, 1, 2, 5, 16, 64, 312, 1812, 12288, 95616, 840960, 8254080, 89441280};
  std::vector<Integer> u;
  for (std::size_t n = 0; n < a.size(); ++n) u.emplace_back(n % 2 == 1 ? a[n] : -a[n]);
  const auto v = stirling_transform(u);
  const auto g = genocchi_egf_recurrence(12);
  CHECK(v == g.values);
  CHECK(stirling_inverse_transform(v) == u);
}

TEST_CASE("stirling transform round-trips on random sequences") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(1, 20);
  std::uniform_int_distribution<std::int64_t> val(-1'000'000, 1'000'000);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> u;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) u.emplace_back(val(rng));
    REQUIRE(stirling_inverse_transform(stirling_transform(u)) == u);
    REQUIRE(stirling_transform(stirling_inverse_transform(u)) == u);
  }
}
