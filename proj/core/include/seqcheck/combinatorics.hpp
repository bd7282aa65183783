#pragma once

// Factorials, Stirling numbers of both kinds, Genocchi numbers and the
// Stirling inversion transform.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seqcheck/exact_arith.hpp"

namespace seqcheck {

Integer factorial(std::int64_t n);

/// Triangle rows 0..N stored row-major; entry (n, k) for 0 <= k <= n.
/// Building is append-only: extend_to(M) keeps rows 0..N and adds N+1..M.
class StirlingFirstTable {
 public:
  StirlingFirstTable();
  explicit StirlingFirstTable(std::size_t rows) : StirlingFirstTable() { extend_to(rows); }

  void extend_to(std::size_t max_row);
  [[nodiscard]] std::size_t max_row() const { return rows_.size() - 1; }
  /// Signed s(n, k). Zero for k > n; throws std::out_of_range for n > max_row().
  [[nodiscard]] const Integer& at(std::size_t n, std::size_t k) const;
  [[nodiscard]] std::span<const Integer> row(std::size_t n) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

class StirlingSecondTable {
 public:
  StirlingSecondTable();
  explicit StirlingSecondTable(std::size_t rows) : StirlingSecondTable() { extend_to(rows); }

  void extend_to(std::size_t max_row);
  [[nodiscard]] std::size_t max_row() const { return rows_.size() - 1; }
  [[nodiscard]] const Integer& at(std::size_t n, std::size_t k) const;
  [[nodiscard]] std::span<const Integer> row(std::size_t n) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// Rows of Pascal's triangle, cached append-only.
class BinomialRows {
 public:
  BinomialRows();
  void extend_to(std::size_t max_row);
  [[nodiscard]] const Integer& at(std::size_t n, std::size_t k) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

enum class GenocchiAlgorithm { EgfRecurrence, Seidel, FromSequence };

std::string to_string(GenocchiAlgorithm algo);

struct GenocchiSequence {
  std::vector<Integer> values;  // G_0 .. G_N
  GenocchiAlgorithm algorithm;

  [[nodiscard]] std::size_t max_index() const { return values.size() - 1; }
  [[nodiscard]] const Integer& operator[](std::size_t n) const { return values.at(n); }
};

/// Signed Stirling number of the first kind. Requires 0 <= k <= n;
/// throws std::invalid_argument otherwise. Backed by a shared table that
/// grows on demand and is safe to query from several threads.
Integer stirling1(std::int64_t n, std::int64_t k);
Integer stirling2(std::int64_t n, std::int64_t k);

/// G_0..G_n_max from 2 G_n = [n = 1] * 2 - sum_{k<n} C(n, k) G_k.
/// Each halving is checked for exactness.
GenocchiSequence genocchi_egf_recurrence(std::int64_t n_max);

/// G_0..G_n_max from tangent numbers built on a boustrophedon (Seidel)
/// triangle, using |G_2l| = l * T_(2l-1) / 4^(l-1). Integer-only.
GenocchiSequence genocchi_seidel(std::int64_t n_max);

enum class SummationOrder {
  FirstThenSecond,  // sum_i s(n, i) S(i, k)
  SecondThenFirst,  // sum_i S(n, i) s(i, k)
};

/// Kronecker delta(n, k) if the two Stirling matrices are mutually inverse.
Integer orthogonality_sum(std::int64_t n, std::int64_t k, SummationOrder order = SummationOrder::FirstThenSecond);

/// v_n = sum_{k<=n} u_k S(n, k).
std::vector<Integer> stirling_transform(std::span<const Integer> u);
/// u_n = sum_{k<=n} v_k s(n, k); inverse of stirling_transform.
std::vector<Integer> stirling_inverse_transform(std::span<const Integer> v);

}  // namespace seqcheck
