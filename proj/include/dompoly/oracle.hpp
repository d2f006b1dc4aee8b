#pragma once

/**
 * @file oracle.hpp
 * @brief Exhaustive enumeration of dominating sets of C_n over n-bit masks.
 *
 * This is the reference for every other module and deliberately shares no
 * logic with them: a mask m dominates C_n iff m | rotl(m) | rotr(m) covers
 * all n bits.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dompoly/core.hpp"
#include "dompoly/count.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

struct OracleLimits {
  std::size_t max_n = 24;
  std::uint64_t max_subsets = std::uint64_t{1} << 32;
  /// Worker threads for full-row scans; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Thrown when a request exceeds OracleLimits.
struct OracleLimitError : std::runtime_error {
  OracleLimitError(const std::string& what, std::uint64_t estimate)
      : std::runtime_error(what), estimate(estimate) {}
  /// Number of subsets the request would have examined (saturating).
  std::uint64_t estimate;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Bit v-1 of the mask is vertex v.
bool mask_dominates(std::size_t n, std::uint64_t mask);

/// All i-subsets of [n] that dominate C_n, lexicographically sorted.
/// Requires 3 <= n <= limits.max_n and i <= n.
Family enumerate_dominating(std::size_t n, std::size_t i, const OracleLimits& limits = {});

/// |enumerate_dominating(n, i)| without storing sets.
Count oracle_count(std::size_t n, std::size_t i, const OracleLimits& limits = {});

/// Result of scanning every subset of [n] once.
struct OracleRow {
  std::vector<Count> counts;  ///< counts[i] = dominating i-subsets
  std::uint64_t examined = 0; ///< 2^n on completion
};

/// Scans [0, 2^n) split into contiguous ranges, one per worker; results are
/// merged by summation so the output does not depend on the split.
OracleRow oracle_row(std::size_t n, const OracleLimits& limits = {});

DominationPolynomial oracle_polynomial(std::size_t n, const OracleLimits& limits = {});

}  // namespace dompoly
