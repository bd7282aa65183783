#include "seqcheck/power_series.hpp"

#include <algorithm>
#include <string>

namespace seqcheck {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = Rational(1);
  return s;
}

const Rational& TruncatedSeries::coeff(std::size_t j) const {
  if (j > order()) {
    throw std::out_of_range("coefficient " + std::to_string(j) + " beyond truncation order " + std::to_string(order()));
  }
  return coeffs_[j];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw std::out_of_range("cannot raise truncation order " + std::to_string(this->order()) + " to " +
                            std::to_string(order));
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries out(*this);
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (std::size_t j = 0; j <= n; ++j) out.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (std::size_t j = 0; j <= n; ++j) out.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries out(a);
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; }
TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries ps_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.coeff(0).is_zero()) throw std::domain_error("non-unit divisor");
  const std::size_t n = std::min(a.order(), b.order());
  const Rational inv = b.coeff(0).reciprocal();
  std::vector<Rational> q(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = a.coeff(i);
    for (std::size_t j = 1; j <= i; ++j) {
      if (!b.coeff(j).is_zero()) acc -= b.coeff(j) * q[i - j];
    }
    q[i] = acc * inv;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries ps_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (!inner.coeff(0).is_zero()) throw std::domain_error("composition requires zero constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  const TruncatedSeries in = inner.truncated(n);
  TruncatedSeries acc = TruncatedSeries::constant(outer.coeff(n), n);
  for (std::size_t j = n; j-- > 0;) {
    acc = acc * in + TruncatedSeries::constant(outer.coeff(j), n);
  }
  return acc;
}

TruncatedSeries ps_log_one_minus_x(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t j = 1; j <= order; ++j) c[j] = Rational(Integer(-1), Integer(static_cast<std::int64_t>(j)));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries ps_log_one_plus_x(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t j = 1; j <= order; ++j) {
    c[j] = Rational(Integer(j % 2 == 1 ? 1 : -1), Integer(static_cast<std::int64_t>(j)));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries ps_exp(const TruncatedSeries& a) {
  if (!a.coeff(0).is_zero()) throw std::domain_error("ps_exp requires zero constant term");
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t j = 1; j <= m; ++j) {
      if (a.coeff(j).is_zero()) continue;
      acc += Rational(static_cast<std::int64_t>(j)) * a.coeff(j) * b[m - j];
    }
    b[m] = acc / Rational(static_cast<std::int64_t>(m));
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries series_h(std::size_t order) { return ps_log_one_minus_x(order); }

TruncatedSeries series_f(std::size_t order) {
  const TruncatedSeries two = TruncatedSeries::constant(Rational(2), order);
  const TruncatedSeries x = TruncatedSeries::variable(order);
  return ps_div(ps_log_one_minus_x(order).scaled(Rational(-2)), two - x);
}

TruncatedSeries series_g(std::size_t order) {
  const TruncatedSeries x = TruncatedSeries::variable(order);
  const TruncatedSeries one = TruncatedSeries::constant(Rational(1), order);
  return ps_div(x.scaled(Rational(2)), ps_exp(x) + one);
}

std::vector<Rational> egf_coefficients(const TruncatedSeries& s) {
  std::vector<Rational> out;
  out.reserve(s.order() + 1);
  Integer fact(1);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n > 0) fact *= Integer(static_cast<std::int64_t>(n));
    out.push_back(s.coeff(n) * Rational(fact));
  }
  return out;
}

std::vector<Rational> log_power_coefficients(std::int64_t k, std::int64_t order) {
  if (k < 0) throw std::invalid_argument("log power k must be non-negative");
  if (order < k) throw std::invalid_argument("order must be at least k");
  const auto n = static_cast<std::size_t>(order);
  const TruncatedSeries log1p = ps_log_one_plus_x(n);
  TruncatedSeries power = TruncatedSeries::constant(Rational(1), n);
  for (std::int64_t i = 1; i <= k; ++i) {
    power = (power * log1p).scaled(Rational(Integer(1), Integer(i)));
  }
  return egf_coefficients(power);
}

}  // namespace seqcheck
