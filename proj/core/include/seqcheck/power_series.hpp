#pragma once

// Truncated formal power series over exact rationals.
//
// Coefficients are ordinary ones: coeff(j) is [x^j]. Exponential generating
// function semantics only appear in egf_coefficients(). A series of order N
// knows c_0..c_N and nothing beyond; binary operations truncate to the
// smaller order, and reading past the order throws.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seqcheck/exact_arith.hpp"

namespace seqcheck {

class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients c_0..c_N; the order is size - 1. Throws if empty.
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// The series x (or just 0 at order 0).
  static TruncatedSeries variable(std::size_t order);

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  /// Throws std::out_of_range for j > order().
  [[nodiscard]] const Rational& coeff(std::size_t j) const;
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

  [[nodiscard]] TruncatedSeries truncated(std::size_t order) const;
  [[nodiscard]] TruncatedSeries scaled(const Rational& c) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// q with q * b = a up to min order. Throws std::domain_error("non-unit
/// divisor") when b has a zero constant term.
TruncatedSeries ps_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// outer(inner(x)) by Horner's scheme over the series ring. Throws
/// std::domain_error when inner has a nonzero constant term.
TruncatedSeries ps_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// log(1 - x) = -sum_{j>=1} x^j / j.
TruncatedSeries ps_log_one_minus_x(std::size_t order);
/// log(1 + x) = sum_{j>=1} (-1)^(j-1) x^j / j.
TruncatedSeries ps_log_one_plus_x(std::size_t order);

/// exp(a) for a with zero constant term, from n b_n = sum_j j a_j b_(n-j).
TruncatedSeries ps_exp(const TruncatedSeries& a);

/// f(x) = -2 log(1 - x) / (2 - x).
TruncatedSeries series_f(std::size_t order);
/// g(x) = 2x / (e^x + 1).
TruncatedSeries series_g(std::size_t order);
/// h(x) = log(1 - x).
TruncatedSeries series_h(std::size_t order);

/// n! c_n for n = 0..order.
std::vector<Rational> egf_coefficients(const TruncatedSeries& s);

/// n! [x^n] log^k(1 + x) / k! for n = 0..order. Requires order >= k.
std::vector<Rational> log_power_coefficients(std::int64_t k, std::int64_t order);

}  // namespace seqcheck
