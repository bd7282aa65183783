#include "seqcheck/sequence_engine.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <future>

#include "seqcheck/power_series.hpp"

namespace seqcheck {

namespace {

std::size_t non_negative(std::int64_t v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative, got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

Integer checked_integer(const Rational& r, std::size_t n, MethodId method) {
  if (!r.is_integer()) {
    throw InvariantViolation("integrality broken: " + std::string(to_string(method)) + " gives a_" + std::to_string(n) +
                             " = " + r.to_string());
  }
  return r.num();
}

}  // namespace

std::string_view to_string(MethodId m) {
  switch (m) {
    case MethodId::Recurrence: return "recurrence";
    case MethodId::ClosedForm: return "closed";
    case MethodId::GenocchiStirling: return "genocchi-stirling";
    case MethodId::Reduced: return "reduced";
    case MethodId::Egf: return "egf";
  }
  return "unknown";
}

std::optional<MethodId> parse_method(std::string_view name) {
  for (MethodId m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

const std::vector<Integer>& reference_table() {
  static const std::vector<Integer> table{0,      1,      2,       5,       16,       64,      312,
                                          1812,   12288,  95616,   840960,  8254080,  89441280};
  return table;
}

// Recurrence

std::vector<DyadicRational> recurrence_iterates(std::int64_t n_max) {
  const std::size_t top = non_negative(n_max, "n_max");
  std::vector<DyadicRational> out;
  out.reserve(top + 1);
  out.emplace_back();
  Integer fact(1);  // (n-1)!
  for (std::size_t n = 1; n <= top; ++n) {
    if (n > 1) fact *= Integer(static_cast<std::int64_t>(n - 1));
    const DyadicRational& prev = out.back();
    // (n/2) a_(n-1): multiply the mantissa by n and bump the exponent.
    const DyadicRational half_step(prev.mantissa() * Integer(static_cast<std::int64_t>(n)), prev.exponent() + 1);
    out.push_back(half_step + DyadicRational(fact, 0));
  }
  return out;
}

std::vector<SequenceRecord> a_recurrence(std::int64_t n_max) {
  const auto iterates = recurrence_iterates(n_max);
  std::vector<SequenceRecord> out;
  out.reserve(iterates.size());
  for (std::size_t n = 0; n < iterates.size(); ++n) {
    if (!iterates[n].is_integer()) {
      throw InvariantViolation("integrality broken at n = " + std::to_string(n) + ": " + iterates[n].to_rational().to_string());
    }
    out.push_back({n, iterates[n].mantissa(), MethodId::Recurrence});
  }
  return out;
}

// Closed form

Rational power_harmonic_sum(const Integer& p, std::int64_t n) {
  const std::size_t top = non_negative(n, "n");
  Rational sum;
  Integer power(1);
  for (std::size_t k = 1; k <= top; ++k) {
    power *= p;
    sum += Rational(power, Integer(static_cast<std::int64_t>(k)));
  }
  return sum;
}

Rational harmonic2_sum(std::int64_t n) { return power_harmonic_sum(Integer(2), n); }

SequenceRecord a_closed_form(std::int64_t n) {
  const std::size_t nn = non_negative(n, "n");
  const Rational scale(Integer::factorial(nn), Integer::pow2(nn));
  return {nn, checked_integer(scale * harmonic2_sum(n), nn, MethodId::ClosedForm), MethodId::ClosedForm};
}

// Genocchi / Stirling

SequenceTables::SequenceTables(std::size_t max_n)
    : max_n_(max_n), first_(max_n), second_(max_n), genocchi_(genocchi_egf_recurrence(static_cast<std::int64_t>(max_n))) {}

namespace {

std::size_t table_index(std::int64_t n, const SequenceTables& tables) {
  const std::size_t nn = non_negative(n, "n");
  if (nn > tables.max_n()) {
    throw std::out_of_range("n = " + std::to_string(nn) + " beyond tables built to " + std::to_string(tables.max_n()));
  }
  return nn;
}

}  // namespace

SequenceRecord a_genocchi_stirling(std::int64_t n, const SequenceTables& tables) {
  const std::size_t nn = table_index(n, tables);
  Integer sum(0);
  for (std::size_t k = 0; k <= nn; ++k) {
    const Integer& g = tables.genocchi()[k];
    if (!g.is_zero()) sum += g * tables.first().at(nn, k);
  }
  // (-1)^(n-1): negate for even n.
  if (nn % 2 == 0) sum = -sum;
  return {nn, std::move(sum), MethodId::GenocchiStirling};
}

SequenceRecord a_genocchi_stirling(std::int64_t n) {
  return a_genocchi_stirling(n, SequenceTables(non_negative(n, "n")));
}

SequenceRecord a_reduced(std::int64_t n, const SequenceTables& tables) {
  const std::size_t nn = table_index(n, tables);
  if (nn == 0) return {0, Integer(0), MethodId::Reduced};
  Integer sum = Integer::factorial(nn - 1);
  for (std::size_t l = 1; 2 * l <= nn; ++l) {
    Integer term = (tables.genocchi()[2 * l] * tables.first().at(nn, 2 * l)).abs();
    if (l % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return {nn, std::move(sum), MethodId::Reduced};
}

SequenceRecord a_reduced(std::int64_t n) { return a_reduced(n, SequenceTables(non_negative(n, "n"))); }

// EGF

std::vector<SequenceRecord> a_egf(std::int64_t n_max) {
  const std::size_t top = non_negative(n_max, "n_max");
  const auto coeffs = egf_coefficients(series_f(top));
  std::vector<SequenceRecord> out;
  out.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    out.push_back({n, checked_integer(coeffs[n], n, MethodId::Egf), MethodId::Egf});
  }
  return out;
}

std::vector<SequenceRecord> compute_sequence(MethodId method, std::int64_t n_max) {
  const std::size_t top = non_negative(n_max, "n_max");
  switch (method) {
    case MethodId::Recurrence: return a_recurrence(n_max);
    case MethodId::Egf: return a_egf(n_max);
    case MethodId::ClosedForm: {
      std::vector<SequenceRecord> out;
      for (std::size_t n = 0; n <= top; ++n) out.push_back(a_closed_form(static_cast<std::int64_t>(n)));
      return out;
    }
    case MethodId::GenocchiStirling:
    case MethodId::Reduced: {
      const SequenceTables tables(top);
      std::vector<SequenceRecord> out;
      for (std::size_t n = 0; n <= top; ++n) {
        const auto i = static_cast<std::int64_t>(n);
        out.push_back(method == MethodId::Reduced ? a_reduced(i, tables) : a_genocchi_stirling(i, tables));
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown method");
}

// Valuation scan

std::vector<ScanRow> valuation_scan(const Integer& p, std::int64_t n_max) {
  if (!is_prime(p)) throw std::invalid_argument("valuation_scan needs a prime, got " + p.to_string());
  if (n_max < 1) throw std::invalid_argument("valuation_scan needs n_max >= 1");
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  Rational sum;
  Integer power(1);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    power *= p;
    sum += Rational(power, Integer(n));
    const std::int64_t lhs = val_p(p, sum);
    const std::int64_t rhs = digit_sum(p, Integer(n));
    rows.push_back({p, n, lhs, rhs, lhs >= rhs});
  }
  return rows;
}

ScanRow check_valuation_bound(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("check_valuation_bound needs n >= 1");
  const Integer two(2);
  const std::int64_t lhs = val_p(two, harmonic2_sum(n));
  const std::int64_t rhs = digit_sum(two, Integer(n));
  ScanRow row{two, n, lhs, rhs, lhs >= rhs};
  if (!row.holds) {
    throw InvariantViolation("2-adic bound fails at n = " + std::to_string(n) + ": " + std::to_string(lhs) + " < " +
                             std::to_string(rhs));
  }
  return row;
}

// Inversion

namespace {

GenocchiSequence genocchi_from_values(const std::vector<SequenceRecord>& a, const StirlingSecondTable& second) {
  GenocchiSequence out{{}, GenocchiAlgorithm::FromSequence};
  out.values.reserve(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Integer g(0);
    for (std::size_t k = 1; k <= n; ++k) {
      const Integer term = a[k].value * second.at(n, k);
      if (k % 2 == 1) {
        g += term;
      } else {
        g -= term;
      }
    }
    out.values.push_back(std::move(g));
  }
  return out;
}

}  // namespace

GenocchiSequence genocchi_from_a(std::int64_t n_max) {
  const std::size_t top = non_negative(n_max, "n_max");
  const auto a = a_recurrence(n_max);
  for (std::size_t n = 0; n <= top; ++n) {
    const auto closed = a_closed_form(static_cast<std::int64_t>(n));
    if (closed.value != a[n].value) {
      throw InvariantViolation("recurrence and closed form disagree at n = " + std::to_string(n));
    }
  }
  auto out = genocchi_from_values(a, StirlingSecondTable(top));
  const auto reference = genocchi_egf_recurrence(n_max);
  for (std::size_t n = 0; n <= top; ++n) {
    if (out.values[n] != reference.values[n]) {
      throw InvariantViolation("inversion gives G_" + std::to_string(n) + " = " + out.values[n].to_string() +
                               ", expected " + reference.values[n].to_string());
    }
  }
  return out;
}

Rational asymptotic_ratio(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("asymptotic_ratio needs n >= 1");
  const auto a = a_recurrence(n);
  return Rational(a.back().value, Integer(2) * Integer::factorial(static_cast<std::uint64_t>(n - 1)));
}

// Verification

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string span_text(std::int64_t lo, std::int64_t hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

// Builds a check result and records only the first failure.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::string range) : result_{std::move(name), true, std::move(range), std::nullopt} {}

  bool failed() const { return !result_.passed; }

  void expect(bool ok, const std::function<Counterexample()>& describe) {
    if (ok || failed()) return;
    result_.passed = false;
    result_.counterexample = describe();
  }

  template <typename T>
  void expect_equal(const std::string& index, const T& expected, const T& actual) {
    expect(expected == actual, [&] { return Counterexample{index, expected.to_string(), actual.to_string()}; });
  }

  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
};

using CheckFn = std::function<CheckResult()>;

// Wraps a check so that an escaping exception becomes a failed result.
CheckFn guarded(std::string name, std::string range, std::function<CheckResult()> body) {
  return [name = std::move(name), range = std::move(range), body = std::move(body)]() {
    try {
      return body();
    } catch (const std::exception& e) {
      return CheckResult{name, false, range, Counterexample{"exception", "no exception", e.what()}};
    }
  };
}

std::string nk(std::size_t n, std::size_t k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

}  // namespace

VerificationReport cross_verify(const VerifyOptions& o) {
  const std::size_t n_max = non_negative(o.n_max, "n_max");
  const std::size_t series_order = non_negative(o.series_order, "series_order");
  const std::size_t egf_max = std::min(n_max, series_order);
  const std::size_t stirling_max = non_negative(o.stirling_max, "stirling_max");
  const std::size_t genocchi_max = non_negative(o.genocchi_max, "genocchi_max");
  const std::size_t log_power_max = non_negative(o.log_power_max, "log_power_max");
  non_negative(o.integrality_max, "integrality_max");
  non_negative(o.legendre_max, "legendre_max");

  std::vector<CheckFn> checks;

  // Shared inputs are computed up front, then only read by the checks.
  const auto recurrence = std::make_shared<std::vector<SequenceRecord>>(a_recurrence(o.n_max));
  const auto tables = std::make_shared<SequenceTables>(std::max({n_max, stirling_max, genocchi_max}));

  const std::size_t ref_max = std::min<std::size_t>(n_max, 12);
  checks.push_back(guarded("reference_table", span_text(0, static_cast<std::int64_t>(ref_max)), [=] {
    CheckBuilder b("reference_table", span_text(0, static_cast<std::int64_t>(ref_max)));
    const auto egf = a_egf(static_cast<std::int64_t>(ref_max));
    for (std::size_t n = 0; n <= ref_max && !b.failed(); ++n) {
      const Integer& want = reference_table()[n];
      const auto i = static_cast<std::int64_t>(n);
      const std::string idx = "n=" + std::to_string(n);
      b.expect_equal(idx + " recurrence", want, (*recurrence)[n].value);
      b.expect_equal(idx + " closed", want, a_closed_form(i).value);
      b.expect_equal(idx + " genocchi-stirling", want, a_genocchi_stirling(i, *tables).value);
      b.expect_equal(idx + " reduced", want, a_reduced(i, *tables).value);
      b.expect_equal(idx + " egf", want, egf[n].value);
    }
    return b.finish();
  }));

  const std::string method_range = span_text(0, o.n_max);
  checks.push_back(guarded("agreement:closed", method_range, [=] {
    CheckBuilder b("agreement:closed", method_range);
    for (std::size_t n = 0; n <= n_max && !b.failed(); ++n) {
      b.expect_equal("n=" + std::to_string(n), (*recurrence)[n].value, a_closed_form(static_cast<std::int64_t>(n)).value);
    }
    return b.finish();
  }));
  checks.push_back(guarded("agreement:genocchi-stirling", method_range, [=] {
    CheckBuilder b("agreement:genocchi-stirling", method_range);
    for (std::size_t n = 0; n <= n_max && !b.failed(); ++n) {
      b.expect_equal("n=" + std::to_string(n), (*recurrence)[n].value,
                     a_genocchi_stirling(static_cast<std::int64_t>(n), *tables).value);
    }
    return b.finish();
  }));
  checks.push_back(guarded("agreement:reduced", method_range, [=] {
    CheckBuilder b("agreement:reduced", method_range);
    for (std::size_t n = 0; n <= n_max && !b.failed(); ++n) {
      b.expect_equal("n=" + std::to_string(n), (*recurrence)[n].value, a_reduced(static_cast<std::int64_t>(n), *tables).value);
    }
    return b.finish();
  }));
  const std::string egf_range = span_text(0, static_cast<std::int64_t>(egf_max));
  checks.push_back(guarded("agreement:egf", egf_range, [=] {
    CheckBuilder b("agreement:egf", egf_range);
    const auto egf = a_egf(static_cast<std::int64_t>(egf_max));
    for (std::size_t n = 0; n <= egf_max && !b.failed(); ++n) {
      b.expect_equal("n=" + std::to_string(n), (*recurrence)[n].value, egf[n].value);
    }
    return b.finish();
  }));

  const std::string integrality_range = span_text(0, o.integrality_max);
  checks.push_back(guarded("integrality", integrality_range, [=] {
    CheckBuilder b("integrality", integrality_range);
    const auto iterates = recurrence_iterates(o.integrality_max);
    for (std::size_t n = 0; n < iterates.size() && !b.failed(); ++n) {
      b.expect(iterates[n].is_integer(), [&] {
        return Counterexample{"n=" + std::to_string(n), "exponent 0", "exponent " + std::to_string(iterates[n].exponent())};
      });
    }
    return b.finish();
  }));

  const std::string valuation_range = span_text(1, o.valuation_max);
  checks.push_back(guarded("valuation_bound", valuation_range, [=] {
    CheckBuilder b("valuation_bound", valuation_range);
    if (o.valuation_max >= 1) {
      for (const auto& row : valuation_scan(Integer(2), o.valuation_max)) {
        b.expect(row.holds, [&] {
          return Counterexample{"n=" + std::to_string(row.n), ">= " + std::to_string(row.rhs), std::to_string(row.lhs)};
        });
      }
    }
    return b.finish();
  }));

  checks.push_back(guarded("scan_p3_witness", "p=3,n=2", [] {
    CheckBuilder b("scan_p3_witness", "p=3,n=2");
    const auto rows = valuation_scan(Integer(3), 2);
    b.expect(!rows[1].holds && rows[1].lhs == 1 && rows[1].rhs == 2, [&] {
      return Counterexample{"n=2", "lhs=1,rhs=2,holds=false",
                            "lhs=" + std::to_string(rows[1].lhs) + ",rhs=" + std::to_string(rows[1].rhs)};
    });
    return b.finish();
  }));

  const std::string legendre_range = "p in {2,3,5,7}, " + span_text(1, o.legendre_max);
  checks.push_back(guarded("legendre", legendre_range, [=] {
    CheckBuilder b("legendre", legendre_range);
    for (const std::int64_t p : {2, 3, 5, 7}) {
      Integer fact(1);
      const Integer prime(p);
      for (std::int64_t n = 1; n <= o.legendre_max && !b.failed(); ++n) {
        fact *= Integer(n);
        Integer rest = fact;
        const Integer direct(static_cast<std::int64_t>(rest.remove_factor(prime)));
        b.expect_equal("p=" + std::to_string(p) + ",n=" + std::to_string(n), direct,
                       legendre_factorial_valuation(prime, Integer(n)));
      }
    }
    return b.finish();
  }));

  const std::string stirling_range = span_text(0, static_cast<std::int64_t>(stirling_max));
  checks.push_back(guarded("stirling1_structure", stirling_range, [=] {
    CheckBuilder b("stirling1_structure", stirling_range);
    const auto& s = tables->first();
    for (std::size_t n = 0; n <= stirling_max && !b.failed(); ++n) {
      for (std::size_t k = 0; k <= n && !b.failed(); ++k) {
        const int want_sign = (n + k) % 2 == 0 ? 1 : -1;
        const Integer& v = s.at(n, k);
        b.expect(v.is_zero() || v.sign() == want_sign,
                 [&] { return Counterexample{nk(n, k), "sign " + std::to_string(want_sign), v.to_string()}; });
      }
      if (n >= 1) {
        Integer closed = Integer::factorial(n - 1);
        if (n % 2 == 0) closed = -closed;
        b.expect_equal(nk(n, 1), closed, s.at(n, 1));
      }
    }
    return b.finish();
  }));

  checks.push_back(guarded("stirling1_falling_factorial", stirling_range, [=] {
    CheckBuilder b("stirling1_falling_factorial", stirling_range);
    std::vector<Integer> poly{Integer(1)};  // X (X-1) ... (X-n+1), ascending powers
    for (std::size_t n = 1; n <= stirling_max && !b.failed(); ++n) {
      const Integer root(static_cast<std::int64_t>(n - 1));
      std::vector<Integer> next(poly.size() + 1);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= root * poly[i];
      }
      poly = std::move(next);
      for (std::size_t k = 0; k <= n && !b.failed(); ++k) b.expect_equal(nk(n, k), poly[k], tables->first().at(n, k));
    }
    return b.finish();
  }));

  checks.push_back(guarded("orthogonality", stirling_range, [=] {
    CheckBuilder b("orthogonality", stirling_range);
    const auto& s = tables->first();
    const auto& S = tables->second();
    for (std::size_t n = 0; n <= stirling_max && !b.failed(); ++n) {
      for (std::size_t k = 0; k <= n && !b.failed(); ++k) {
        Integer first_outer(0);
        Integer second_outer(0);
        for (std::size_t i = k; i <= n; ++i) {
          first_outer += s.at(n, i) * S.at(i, k);
          second_outer += S.at(n, i) * s.at(i, k);
        }
        const Integer delta(n == k ? 1 : 0);
        b.expect_equal(nk(n, k) + " s*S", delta, first_outer);
        b.expect_equal(nk(n, k) + " S*s", delta, second_outer);
      }
    }
    return b.finish();
  }));

  const std::string genocchi_range = span_text(0, static_cast<std::int64_t>(genocchi_max));
  checks.push_back(guarded("genocchi_dual", genocchi_range, [=] {
    CheckBuilder b("genocchi_dual", genocchi_range);
    const auto egf = genocchi_egf_recurrence(static_cast<std::int64_t>(genocchi_max));
    const auto seidel = genocchi_seidel(static_cast<std::int64_t>(genocchi_max));
    for (std::size_t n = 0; n <= genocchi_max && !b.failed(); ++n) {
      b.expect_equal("n=" + std::to_string(n), egf[n], seidel[n]);
    }
    return b.finish();
  }));

  checks.push_back(guarded("genocchi_structure", genocchi_range, [=] {
    CheckBuilder b("genocchi_structure", genocchi_range);
    const auto& g = tables->genocchi();
    if (genocchi_max >= 1) {
      b.expect_equal("n=0", Integer(0), g[0]);
      b.expect_equal("n=1", Integer(1), g[1]);
    }
    for (std::size_t n = 2; n <= genocchi_max && !b.failed(); ++n) {
      const std::string idx = "n=" + std::to_string(n);
      if (n % 2 == 1) {
        b.expect_equal(idx, Integer(0), g[n]);
      } else {
        const int want = (n / 2) % 2 == 0 ? 1 : -1;
        b.expect(g[n].sign() == want, [&] { return Counterexample{idx, "sign " + std::to_string(want), g[n].to_string()}; });
      }
    }
    return b.finish();
  }));

  checks.push_back(guarded("inversion", stirling_range, [=] {
    CheckBuilder b("inversion", stirling_range);
    const auto a = a_recurrence(static_cast<std::int64_t>(stirling_max));
    const auto from_a = genocchi_from_values(a, tables->second());
    const auto seidel = genocchi_seidel(static_cast<std::int64_t>(stirling_max));
    for (std::size_t n = 0; n <= stirling_max && !b.failed(); ++n) {
      b.expect_equal("n=" + std::to_string(n) + " egf", tables->genocchi()[n], from_a[n]);
      b.expect_equal("n=" + std::to_string(n) + " seidel", seidel[n], from_a[n]);
    }
    // The same identity through the transform pair: u_n = (-1)^(n-1) a_n maps to G.
    std::vector<Integer> u;
    for (const auto& r : a) u.push_back(r.n % 2 == 1 ? r.value : -r.value);
    const auto v = stirling_transform(u);
    for (std::size_t n = 0; n <= stirling_max && !b.failed(); ++n) {
      b.expect_equal("n=" + std::to_string(n) + " transform", tables->genocchi()[n], v[n]);
    }
    const auto back = stirling_inverse_transform(v);
    for (std::size_t n = 0; n <= stirling_max && !b.failed(); ++n) {
      b.expect_equal("n=" + std::to_string(n) + " inverse transform", u[n], back[n]);
    }
    return b.finish();
  }));

  const std::string series_range = "order " + std::to_string(series_order);
  auto series_check = [&](std::string name, std::function<std::pair<TruncatedSeries, TruncatedSeries>()> sides) {
    checks.push_back(guarded(name, series_range, [name, series_range, sides = std::move(sides)] {
      CheckBuilder b(name, series_range);
      const auto [lhs, rhs] = sides();
      b.expect(lhs.order() == rhs.order(), [&] {
        return Counterexample{"order", std::to_string(lhs.order()), std::to_string(rhs.order())};
      });
      for (std::size_t j = 0; j <= std::min(lhs.order(), rhs.order()) && !b.failed(); ++j) {
        b.expect_equal("x^" + std::to_string(j), lhs.coeff(j), rhs.coeff(j));
      }
      return b.finish();
    }));
  };
  series_check("egf:log_identity", [series_order] {
    const auto two_minus_x = TruncatedSeries::constant(Rational(2), series_order) - TruncatedSeries::variable(series_order);
    return std::make_pair(two_minus_x * series_f(series_order), ps_log_one_minus_x(series_order).scaled(Rational(-2)));
  });
  series_check("egf:genocchi_identity", [series_order] {
    const auto x = TruncatedSeries::variable(series_order);
    const auto lhs = (ps_exp(x) + TruncatedSeries::constant(Rational(1), series_order)) * series_g(series_order);
    return std::make_pair(lhs, x.scaled(Rational(2)));
  });
  series_check("egf:composition", [series_order] {
    return std::make_pair(series_f(series_order), -ps_compose(series_g(series_order), series_h(series_order)));
  });

  const std::string log_range = span_text(0, static_cast<std::int64_t>(log_power_max));
  checks.push_back(guarded("log_power", log_range, [=] {
    CheckBuilder b("log_power", log_range);
    for (std::size_t k = 0; k <= log_power_max && !b.failed(); ++k) {
      const auto coeffs = log_power_coefficients(static_cast<std::int64_t>(k), static_cast<std::int64_t>(log_power_max));
      for (std::size_t n = 0; n <= log_power_max && !b.failed(); ++n) {
        const Rational want = n >= k ? Rational(tables->first().at(n, k)) : Rational();
        b.expect_equal(nk(n, k), want, coeffs[n]);
      }
    }
    return b.finish();
  }));

  const std::string asym_range = span_text(o.asymptotic_min, o.asymptotic_max) + ", C=" + std::to_string(o.asymptotic_constant);
  checks.push_back(guarded("asymptotic", asym_range, [=] {
    CheckBuilder b("asymptotic", asym_range);
    if (o.asymptotic_min < 1) throw std::invalid_argument("asymptotic range must start at n >= 1");
    const auto iterates = a_recurrence(std::max<std::int64_t>(o.asymptotic_max, 0));
    Integer fact = Integer::factorial(static_cast<std::uint64_t>(o.asymptotic_min - 1));
    const Rational bound(o.asymptotic_constant);
    for (std::int64_t n = o.asymptotic_min; n <= o.asymptotic_max && !b.failed(); ++n) {
      if (n > o.asymptotic_min) fact *= Integer(n - 1);
      const Rational ratio(iterates[static_cast<std::size_t>(n)].value, Integer(2) * fact);
      const Rational scaled_gap = (ratio - Rational(1)).abs() * Rational(n);
      b.expect(scaled_gap <= bound, [&] {
        return Counterexample{"n=" + std::to_string(n), "n*|r-1| <= " + bound.to_string(), scaled_gap.to_string()};
      });
    }
    return b.finish();
  }));

  VerificationReport report;
  report.checks.reserve(checks.size());
  if (o.parallel) {
    std::vector<std::future<CheckResult>> pending;
    pending.reserve(checks.size());
    for (auto& fn : checks) pending.push_back(std::async(std::launch::async, fn));
    for (auto& f : pending) report.checks.push_back(f.get());
  } else {
    for (auto& fn : checks) report.checks.push_back(fn());
  }
  return report;
}

VerificationReport cross_verify(std::int64_t n_max, std::int64_t series_order) {
  VerifyOptions o;
  o.n_max = n_max;
  o.series_order = series_order;
  return cross_verify(o);
}

}  // namespace seqcheck
