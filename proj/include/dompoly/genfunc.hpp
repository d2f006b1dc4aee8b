#pragma once

/**
 * @file genfunc.hpp
 * @brief Power-series expansion of the bivariate generating function
 *
 *   f(u,v) = sum_{n>=4} sum_i d(C_n, i) u^n v^i = P(u,v) / (1 - uv - u^2 v - u^3 v).
 *
 * The numerator P collects the boundary terms the recurrence leaves behind
 * when the rows of C_1, C_2, C_3 are not part of f:
 *
 *   P = uv  * u^3 R_3
 *     + u^2 v (u^2 R_2 + u^3 R_3)
 *     + u^3 v (u R_1 + u^2 R_2 + u^3 R_3),      R_n = sum_i d(C_n, i) v^i,
 *
 *     = u^4 v^2 (6 + 4v + v^2 + 5u + 4uv + uv^2 + 3u^2 + 3u^2 v + u^2 v^2).
 *
 * The commonly printed form has 3u and u^2 in place of 5u and 3u^2; it is
 * kept as kPublishedNumerator and disagrees with d(C_n, i) from n = 5 on.
 */

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "dompoly/count.hpp"
#include "dompoly/recurrence.hpp"

namespace dompoly {

struct NumeratorTerm {
  std::size_t u_power;
  std::size_t v_power;
  unsigned value;
};

using Numerator = std::span<const NumeratorTerm>;

/// P(u,v) expanded into monomials.
inline constexpr std::array<NumeratorTerm, 9> kNumerator{{
    {4, 2, 6}, {4, 3, 4}, {4, 4, 1},
    {5, 2, 5}, {5, 3, 4}, {5, 4, 1},
    {6, 2, 3}, {6, 3, 3}, {6, 4, 1},
}};

/// u^4 v^2 (6 + 4v + v^2 + 3u + 4uv + uv^2 + u^2 + 3u^2 v + u^2 v^2).
inline constexpr std::array<NumeratorTerm, 9> kPublishedNumerator{{
    {4, 2, 6}, {4, 3, 4}, {4, 4, 1},
    {5, 2, 3}, {5, 3, 4}, {5, 4, 1},
    {6, 2, 1}, {6, 3, 3}, {6, 4, 1},
}};

/// Recomputes P from the base rows of C_1, C_2, C_3 by the boundary-term
/// expansion above. Nonzero terms only, sorted by (u_power, v_power).
std::vector<NumeratorTerm> boundary_numerator();

/// Coefficients of u^n v^i for n <= order(), i <= n.
class BivariateSeries {
 public:
  std::size_t order() const noexcept { return rows_.empty() ? 0 : rows_.size() - 1; }
  /// Zero for i > n. Requires n <= order().
  const Count& coefficient(std::size_t n, std::size_t i) const;
  const std::vector<Count>& row(std::size_t n) const { return rows_.at(n); }

 private:
  friend BivariateSeries expand(std::size_t n_max, Numerator numerator);
  std::vector<std::vector<Count>> rows_;
};

/// Solves (1 - uv - u^2 v - u^3 v) f = numerator forward in n.
/// Throws std::invalid_argument for n_max < 4.
BivariateSeries expand(std::size_t n_max, Numerator numerator = kNumerator);

/// Coefficient of u^n v^i. Throws std::invalid_argument for n < 4.
Count gf_coefficient(std::size_t n, std::size_t i);

struct Discrepancy {
  std::size_t n;
  std::size_t i;
  Count series;
  Count table;
};

/// Every (n, i) with 4 <= n <= series.order() where the series and the table
/// differ. The table is extended as needed.
std::vector<Discrepancy> compare_with_table(const BivariateSeries& series,
                                            DominationTable& table);

}  // namespace dompoly
