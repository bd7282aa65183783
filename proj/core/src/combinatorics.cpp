#include "seqcheck/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>

namespace seqcheck {

namespace {

std::size_t checked_index(std::int64_t v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

void check_pair(std::int64_t n, std::int64_t k) {
  checked_index(n, "n");
  checked_index(k, "k");
  if (k > n) throw std::invalid_argument("Stirling index k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

const Integer& zero_integer() {
  static const Integer zero(0);
  return zero;
}

// Grow-on-demand table shared by the free-function queries. Readers take a
// shared lock; growth takes the exclusive one.
template <typename Table>
class SharedTable {
 public:
  Integer get(std::size_t n, std::size_t k) {
    {
      std::shared_lock lock(mutex_);
      if (table_.max_row() >= n) return table_.at(n, k);
    }
    std::unique_lock lock(mutex_);
    if (table_.max_row() < n) table_.extend_to(n);
    return table_.at(n, k);
  }

 private:
  std::shared_mutex mutex_;
  Table table_;
};

SharedTable<StirlingFirstTable>& shared_first() {
  static SharedTable<StirlingFirstTable> t;
  return t;
}

SharedTable<StirlingSecondTable>& shared_second() {
  static SharedTable<StirlingSecondTable> t;
  return t;
}

}  // namespace

Integer factorial(std::int64_t n) {
  return Integer::factorial(checked_index(n, "factorial argument"));
}

// StirlingFirstTable

StirlingFirstTable::StirlingFirstTable() : rows_{{Integer(1)}} {}

void StirlingFirstTable::extend_to(std::size_t max_row) {
  rows_.reserve(max_row + 1);
  while (rows_.size() <= max_row) {
    const std::size_t n = rows_.size();
    const auto& prev = rows_.back();
    const Integer shift(static_cast<std::int64_t>(n - 1));
    std::vector<Integer> row(n + 1);
    row[0] = Integer(0);
    for (std::size_t k = 1; k <= n; ++k) {
      // s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
      Integer v = prev[k - 1];
      if (k <= n - 1) v -= shift * prev[k];
      row[k] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

const Integer& StirlingFirstTable::at(std::size_t n, std::size_t k) const {
  if (n > max_row()) throw std::out_of_range("Stirling table row " + std::to_string(n) + " not built");
  if (k > n) return zero_integer();
  return rows_[n][k];
}

std::span<const Integer> StirlingFirstTable::row(std::size_t n) const {
  if (n > max_row()) throw std::out_of_range("Stirling table row " + std::to_string(n) + " not built");
  return rows_[n];
}

// StirlingSecondTable

StirlingSecondTable::StirlingSecondTable() : rows_{{Integer(1)}} {}

void StirlingSecondTable::extend_to(std::size_t max_row) {
  rows_.reserve(max_row + 1);
  while (rows_.size() <= max_row) {
    const std::size_t n = rows_.size();
    const auto& prev = rows_.back();
    std::vector<Integer> row(n + 1);
    row[0] = Integer(0);
    for (std::size_t k = 1; k <= n; ++k) {
      // S(n, k) = S(n-1, k-1) + k S(n-1, k)
      Integer v = prev[k - 1];
      if (k <= n - 1) v += Integer(static_cast<std::int64_t>(k)) * prev[k];
      row[k] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

const Integer& StirlingSecondTable::at(std::size_t n, std::size_t k) const {
  if (n > max_row()) throw std::out_of_range("Stirling table row " + std::to_string(n) + " not built");
  if (k > n) return zero_integer();
  return rows_[n][k];
}

std::span<const Integer> StirlingSecondTable::row(std::size_t n) const {
  if (n > max_row()) throw std::out_of_range("Stirling table row " + std::to_string(n) + " not built");
  return rows_[n];
}

// BinomialRows

BinomialRows::BinomialRows() : rows_{{Integer(1)}} {}

void BinomialRows::extend_to(std::size_t max_row) {
  rows_.reserve(max_row + 1);
  while (rows_.size() <= max_row) {
    const std::size_t n = rows_.size();
    const auto& prev = rows_.back();
    std::vector<Integer> row(n + 1, Integer(1));
    for (std::size_t k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
    rows_.push_back(std::move(row));
  }
}

const Integer& BinomialRows::at(std::size_t n, std::size_t k) const {
  if (n >= rows_.size()) throw std::out_of_range("binomial row " + std::to_string(n) + " not built");
  if (k > n) return zero_integer();
  return rows_[n][k];
}

// Queries

Integer stirling1(std::int64_t n, std::int64_t k) {
  check_pair(n, k);
  return shared_first().get(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

Integer stirling2(std::int64_t n, std::int64_t k) {
  check_pair(n, k);
  return shared_second().get(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

std::string to_string(GenocchiAlgorithm algo) {
  switch (algo) {
    case GenocchiAlgorithm::EgfRecurrence: return "egf-recurrence";
    case GenocchiAlgorithm::Seidel: return "seidel";
    case GenocchiAlgorithm::FromSequence: return "from-a";
  }
  return "unknown";
}

GenocchiSequence genocchi_egf_recurrence(std::int64_t n_max) {
  const std::size_t top = checked_index(n_max, "n_max");
  BinomialRows binom;
  binom.extend_to(top);

  GenocchiSequence out{{}, GenocchiAlgorithm::EgfRecurrence};
  out.values.reserve(top + 1);
  const Integer two(2);
  for (std::size_t n = 0; n <= top; ++n) {
    Integer twice = n == 1 ? two : Integer(0);
    for (std::size_t k = 0; k < n; ++k) twice -= binom.at(n, k) * out.values[k];
    if (!twice.divisible_by(two)) {
      throw InvariantViolation("Genocchi recurrence produced odd 2*G_" + std::to_string(n) + " = " + twice.to_string());
    }
    out.values.push_back(twice.divexact(two));
  }
  return out;
}

GenocchiSequence genocchi_seidel(std::int64_t n_max) {
  const std::size_t top = checked_index(n_max, "n_max");

  // Entringer boustrophedon: E(m, 0) = 0 for m >= 1, E(m, j) = E(m, j-1) + E(m-1, m-j).
  // The zigzag number E_m = E(m, m) is the tangent number T_m for odd m.
  std::vector<Integer> zigzag{Integer(1)};
  std::vector<Integer> prev{Integer(1)};
  const std::size_t last_odd = top >= 2 ? top - 1 : 0;
  for (std::size_t m = 1; m <= last_odd; ++m) {
    std::vector<Integer> cur(m + 1);
    cur[0] = Integer(0);
    for (std::size_t j = 1; j <= m; ++j) cur[j] = cur[j - 1] + prev[m - j];
    zigzag.push_back(cur[m]);
    prev = std::move(cur);
  }

  GenocchiSequence out{{}, GenocchiAlgorithm::Seidel};
  out.values.reserve(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    if (n == 1) {
      out.values.emplace_back(1);
    } else if (n == 0 || n % 2 == 1) {
      out.values.emplace_back(0);
    } else {
      const std::size_t l = n / 2;
      const Integer scaled = Integer(static_cast<std::int64_t>(l)) * zigzag[n - 1];
      Integer magnitude = scaled.shifted_right_exact(2 * (l - 1));
      out.values.push_back(l % 2 == 0 ? std::move(magnitude) : -magnitude);
    }
  }
  return out;
}

Integer orthogonality_sum(std::int64_t n, std::int64_t k, SummationOrder order) {
  check_pair(n, k);
  const auto nn = static_cast<std::size_t>(n);
  const auto kk = static_cast<std::size_t>(k);
  const StirlingFirstTable first(nn);
  const StirlingSecondTable second(nn);
  Integer sum(0);
  for (std::size_t i = kk; i <= nn; ++i) {
    if (order == SummationOrder::FirstThenSecond) {
      sum += first.at(nn, i) * second.at(i, kk);
    } else {
      sum += second.at(nn, i) * first.at(i, kk);
    }
  }
  return sum;
}

std::vector<Integer> stirling_transform(std::span<const Integer> u) {
  if (u.empty()) return {};
  const StirlingSecondTable second(u.size() - 1);
  std::vector<Integer> v(u.size());
  for (std::size_t n = 0; n < u.size(); ++n) {
    Integer acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += u[k] * second.at(n, k);
    v[n] = std::move(acc);
  }
  return v;
}

std::vector<Integer> stirling_inverse_transform(std::span<const Integer> v) {
  if (v.empty()) return {};
  const StirlingFirstTable first(v.size() - 1);
  std::vector<Integer> u(v.size());
  for (std::size_t n = 0; n < v.size(); ++n) {
    Integer acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += v[k] * first.at(n, k);
    u[n] = std::move(acc);
  }
  return u;
}

}  // namespace seqcheck
