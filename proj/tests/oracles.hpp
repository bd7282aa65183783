#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library code paths being checked beyond the Integer/Rational types.

#include <cstdint>
#include <random>
#include <vector>

#include "seqcheck/exact_arith.hpp"

namespace seqcheck::oracle {

/// Exponent of p in |v| by repeated trial division (v != 0).
inline int count_factor(std::int64_t v, std::int64_t p) {
  if (v < 0) v = -v;
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

/// Exponent of p in n! by factoring each of 1..n.
inline int factorial_valuation(std::int64_t n, std::int64_t p) {
  int e = 0;
  for (std::int64_t i = 2; i <= n; ++i) e += count_factor(i, p);
  return e;
}

inline Integer iterated_factorial(int n) {
  Integer r(1);
  for (int i = 2; i <= n; ++i) r = r * Integer(i);
  return r;
}

/// Coefficients (ascending) of X (X-1) ... (X-n+1).
inline std::vector<Integer> falling_factorial_poly(int n) {
  std::vector<Integer> poly{Integer(1)};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next(poly.size() + 1, Integer(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = next[j + 1] + poly[j];
      next[j] = next[j] - Integer(i) * poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

/// Number of set partitions of {1..n} into exactly k blocks, by enumerating
/// restricted growth strings.
inline std::int64_t count_set_partitions(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::int64_t count = 0;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  while (true) {
    int blocks = 0;
    for (int v : rgs) blocks = std::max(blocks, v + 1);
    if (blocks == k) ++count;
    // Next restricted growth string: rgs[i] <= 1 + max(rgs[0..i-1]).
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[static_cast<std::size_t>(j)]);
      if (rgs[static_cast<std::size_t>(i)] <= prefix_max) {
        ++rgs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return count;
}

/// Bernoulli numbers B_0..B_n (B_1 = -1/2) from sum_{k<=m} C(m+1, k) B_k = 0.
inline std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    Integer binom(1);  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += Rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * Integer(m + 1 - k);
      binom = binom.divexact(Integer(k + 1));
    }
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

/// G_n = 2 (1 - 2^n) B_n, an independent route to the Genocchi numbers.
inline std::vector<Integer> genocchi_via_bernoulli(int n) {
  const auto b = bernoulli(n);
  std::vector<Integer> g;
  for (int i = 0; i <= n; ++i) {
    const Rational v = Rational(2) * (Rational(1) - Rational(Integer::pow2(static_cast<std::uint64_t>(i)))) *
                       b[static_cast<std::size_t>(i)];
    g.push_back(v.num());
  }
  return g;
}

/// The recurrence run in plain Rational arithmetic.
inline std::vector<Rational> recurrence_rational(int n_max) {
  std::vector<Rational> a{Rational(0)};
  Integer fact(1);
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) fact = fact * Integer(n - 1);
    a.push_back(Rational(Integer(n), Integer(2)) * a.back() + Rational(fact));
  }
  return a;
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t span = 1000, bool nonzero = true) {
  std::uniform_int_distribution<std::int64_t> num(-span, span);
  std::uniform_int_distribution<std::int64_t> den(1, span);
  std::int64_t n = 0;
  do {
    n = num(rng);
  } while (nonzero && n == 0);
  return Rational(Integer(n), Integer(den(rng)));
}

}  // namespace seqcheck::oracle
