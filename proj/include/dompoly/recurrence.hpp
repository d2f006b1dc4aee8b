#pragma once

/**
 * @file recurrence.hpp
 * @brief d(C_n, i) and D(C_n, x) by the three-term recurrence
 *
 *   d(C_n, i) = d(C_{n-1}, i-1) + d(C_{n-2}, i-1) + d(C_{n-3}, i-1),  n >= 4,
 *
 * seeded with the rows of C_1, C_2 and C_3 (x, x^2+2x, x^3+3x^2+3x).
 */

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "dompoly/count.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

/**
 * Rows n = 1..n_max of d(C_n, i), each stored for i = 0..n with explicit
 * zeros. Extending the table only computes the missing rows.
 */
class DominationTable {
 public:
  /// Throws std::invalid_argument if n_max < 1.
  explicit DominationTable(std::size_t n_max);

  /// Validates the rows (length, base rows, recurrence, window) and throws
  /// std::invalid_argument on any mismatch. rows[k] holds the row of n = k+1.
  static DominationTable from_rows(std::vector<std::vector<Count>> rows);

  std::size_t n_max() const noexcept { return rows_.size(); }

  /// No-op if the table already reaches @p n_max.
  void extend_to(std::size_t n_max);

  /// d(C_n, i); zero for i > n. Requires 1 <= n <= n_max().
  const Count& at(std::size_t n, std::size_t i) const;

  /// Coefficients for i = 0..n.
  std::span<const Count> row(std::size_t n) const;

  Count row_sum(std::size_t n) const;

  friend bool operator==(const DominationTable&, const DominationTable&) = default;

 private:
  DominationTable() = default;
  std::vector<std::vector<Count>> rows_;
};

DominationTable build_table(std::size_t n_max);

/// d(C_n, i). Zero outside ceil(n/3) <= i <= n. Requires n >= 1.
Count count(std::size_t n, std::size_t i);

/// D(C_n, x) via D(C_n) = x [D(C_{n-1}) + D(C_{n-2}) + D(C_{n-3})].
DominationPolynomial polynomial(std::size_t n);

/// S_n, the number of dominating sets of C_n of any size.
Count total_count(std::size_t n);

/// Table cache file: header `DOMPOLY-TABLE v1 n_max=<N>` followed by one
/// line per n holding the decimal counts for i = 0..n separated by spaces.
void write_cache(std::ostream& out, const DominationTable& table);

struct CacheFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws CacheFormatError on malformed text or rows that fail validation.
DominationTable read_cache(std::istream& in);

}  // namespace dompoly
