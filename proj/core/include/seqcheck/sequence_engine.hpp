#pragma once

// The sequence a_0 = 0, a_n = (n/2) a_(n-1) + (n-1)!, computed five ways,
// and the cross-verification harness that checks every identity tying it to
// Genocchi and Stirling numbers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqcheck/combinatorics.hpp"
#include "seqcheck/exact_arith.hpp"

namespace seqcheck {

enum class MethodId { Recurrence, ClosedForm, GenocchiStirling, Reduced, Egf };

inline constexpr MethodId kAllMethods[] = {MethodId::Recurrence, MethodId::ClosedForm, MethodId::GenocchiStirling,
                                           MethodId::Reduced, MethodId::Egf};

/// CLI spelling: recurrence, closed, genocchi-stirling, reduced, egf.
std::string_view to_string(MethodId m);
std::optional<MethodId> parse_method(std::string_view name);

struct SequenceRecord {
  std::size_t n;
  Integer value;
  MethodId method;

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

/// a_0..a_12 as tabulated in the literature for this sequence.
const std::vector<Integer>& reference_table();

/// Exact dyadic iterates of the recurrence, a_0..a_n_max, without the
/// integrality check.
std::vector<DyadicRational> recurrence_iterates(std::int64_t n_max);

/// Runs the recurrence in dyadic arithmetic. Throws InvariantViolation
/// ("integrality broken") if any iterate has a nonzero exponent.
std::vector<SequenceRecord> a_recurrence(std::int64_t n_max);

/// sum_{k=1}^{n} p^k / k. Empty sum for n = 0.
Rational power_harmonic_sum(const Integer& p, std::int64_t n);
Rational harmonic2_sum(std::int64_t n);

/// (n! / 2^n) * harmonic2_sum(n).
SequenceRecord a_closed_form(std::int64_t n);

/// Immutable Stirling and Genocchi tables sized for queries up to max_n.
/// Build once, then query from as many threads as needed.
class SequenceTables {
 public:
  explicit SequenceTables(std::size_t max_n);

  [[nodiscard]] std::size_t max_n() const { return max_n_; }
  [[nodiscard]] const StirlingFirstTable& first() const { return first_; }
  [[nodiscard]] const StirlingSecondTable& second() const { return second_; }
  [[nodiscard]] const GenocchiSequence& genocchi() const { return genocchi_; }

 private:
  std::size_t max_n_;
  StirlingFirstTable first_;
  StirlingSecondTable second_;
  GenocchiSequence genocchi_;
};

/// (-1)^(n-1) sum_{k=0}^{n} G_k s(n, k).
SequenceRecord a_genocchi_stirling(std::int64_t n, const SequenceTables& tables);
SequenceRecord a_genocchi_stirling(std::int64_t n);

/// (n-1)! + sum_{1 <= l <= n/2} (-1)^(l-1) |G_2l s(n, 2l)|; 0 for n = 0.
SequenceRecord a_reduced(std::int64_t n, const SequenceTables& tables);
SequenceRecord a_reduced(std::int64_t n);

/// n! [x^n] of -2 log(1 - x) / (2 - x) for n = 0..n_max.
std::vector<SequenceRecord> a_egf(std::int64_t n_max);

/// a_0..a_n_max by the given method.
std::vector<SequenceRecord> compute_sequence(MethodId method, std::int64_t n_max);

struct ScanRow {
  Integer p;
  std::int64_t n;
  std::int64_t lhs;  // val_p(sum_{k<=n} p^k / k)
  std::int64_t rhs;  // s_p(n)
  bool holds;        // lhs >= rhs

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// Rows n = 1..n_max of the generalized valuation bound. For p > 2 rows that
/// fail are data, not errors.
std::vector<ScanRow> valuation_scan(const Integer& p, std::int64_t n_max);

/// The p = 2 row for a single n. Throws InvariantViolation if the bound fails.
ScanRow check_valuation_bound(std::int64_t n);

/// G_n = sum_{k=1}^{n} (-1)^(k-1) a_k S(n, k), cross-checked against
/// genocchi_egf_recurrence. Throws InvariantViolation on mismatch.
GenocchiSequence genocchi_from_a(std::int64_t n_max);

/// a_n / (2 (n-1)!). Requires n >= 1.
Rational asymptotic_ratio(std::int64_t n);

struct Counterexample {
  std::string index;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string range;
  std::optional<Counterexample> counterexample;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const CheckResult* find(std::string_view name) const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  std::int64_t n_max = 200;
  std::int64_t series_order = 64;
  std::int64_t integrality_max = 1000;
  std::int64_t valuation_max = 1000;
  std::int64_t legendre_max = 2000;
  std::int64_t stirling_max = 40;
  std::int64_t genocchi_max = 60;
  std::int64_t log_power_max = 30;
  std::int64_t asymptotic_min = 8;
  std::int64_t asymptotic_max = 500;
  /// Envelope: |a_n / (2 (n-1)!) - 1| <= asymptotic_constant / n.
  std::int64_t asymptotic_constant = 4;
  bool parallel = true;
};

/// Runs every check and collects the results in a fixed order. Failures are
/// reported with their first counterexample, never thrown.
VerificationReport cross_verify(const VerifyOptions& options);
VerificationReport cross_verify(std::int64_t n_max, std::int64_t series_order);

}  // namespace seqcheck
