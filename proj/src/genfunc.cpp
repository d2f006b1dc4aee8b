#include "dompoly/genfunc.hpp"

#include <stdexcept>
#include <string>

namespace dompoly {

const Count& BivariateSeries::coefficient(std::size_t n, std::size_t i) const {
  static const Count zero = 0;
  const auto& r = rows_.at(n);
  return i < r.size() ? r[i] : zero;
}

std::vector<NumeratorTerm> boundary_numerator() {
  // Coefficients of R_1, R_2, R_3 by power of v.
  const std::array<std::vector<unsigned>, 3> base{{{0, 1}, {0, 2, 1}, {0, 3, 3, 1}}};
  std::array<std::array<unsigned, 8>, 8> grid{};
  // Shift s = 1, 2, 3 of the recurrence contributes u^s v * u^m R_m for
  // every base row m with m + s >= 4.
  for (std::size_t shift = 1; shift <= 3; ++shift) {
    for (std::size_t m = 1; m <= 3; ++m) {
      if (m + shift < 4) continue;
      for (std::size_t i = 0; i < base[m - 1].size(); ++i) {
        grid[m + shift][i + 1] += base[m - 1][i];
      }
    }
  }
  std::vector<NumeratorTerm> terms;
  for (std::size_t u = 0; u < grid.size(); ++u)
    for (std::size_t v = 0; v < grid[u].size(); ++v)
      if (grid[u][v]) terms.push_back({u, v, grid[u][v]});
  return terms;
}

BivariateSeries expand(std::size_t n_max, Numerator numerator) {
  if (n_max < 4) {
    throw std::invalid_argument("expand: n_max must be >= 4, got " + std::to_string(n_max));
  }
  BivariateSeries series;
  auto& rows = series.rows_;
  rows.assign(n_max + 1, {});
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto& row = rows[n];
    row.assign(n + 1, Count{0});
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t back = 1; back <= 3 && back <= n; ++back) {
        const auto& prev = rows[n - back];
        if (i - 1 < prev.size()) row[i] += prev[i - 1];
      }
    }
    for (const auto& term : numerator) {
      if (term.u_power == n && term.v_power <= n) row[term.v_power] += term.value;
    }
  }
  return series;
}

Count gf_coefficient(std::size_t n, std::size_t i) {
  if (n < 4) {
    throw std::invalid_argument("gf_coefficient: the series starts at u^4, got n=" +
                                std::to_string(n));
  }
  return expand(n).coefficient(n, i);
}

std::vector<Discrepancy> compare_with_table(const BivariateSeries& series,
                                            DominationTable& table) {
  std::vector<Discrepancy> out;
  if (series.order() < 4) return out;
  table.extend_to(series.order());
  for (std::size_t n = 4; n <= series.order(); ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      const Count& s = series.coefficient(n, i);
      const Count& t = table.at(n, i);
      if (s != t) out.push_back({n, i, s, t});
    }
  }
  return out;
}

}  // namespace dompoly
