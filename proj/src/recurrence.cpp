#include "dompoly/recurrence.hpp"

#include <string>

namespace dompoly {

namespace {

const std::vector<std::vector<Count>>& base_rows() {
  static const std::vector<std::vector<Count>> rows = {
      {0, 1},
      {0, 2, 1},
      {0, 3, 3, 1},
  };
  return rows;
}

std::vector<Count> next_row(const std::vector<std::vector<Count>>& rows) {
  const std::size_t n = rows.size() + 1;
  const auto& r1 = rows[n - 2];
  const auto& r2 = rows[n - 3];
  const auto& r3 = rows[n - 4];
  std::vector<Count> row(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t j = i - 1;
    if (j < r1.size()) row[i] += r1[j];
    if (j < r2.size()) row[i] += r2[j];
    if (j < r3.size()) row[i] += r3[j];
  }
  return row;
}

}  // namespace

DominationTable::DominationTable(std::size_t n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("DominationTable: n_max must be >= 1");
  }
  extend_to(n_max);
}

DominationTable DominationTable::from_rows(std::vector<std::vector<Count>> rows) {
  if (rows.empty()) throw std::invalid_argument("DominationTable: no rows");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t n = k + 1;
    if (rows[k].size() != n + 1) {
      throw std::invalid_argument("DominationTable: row " + std::to_string(n) +
                                  " has " + std::to_string(rows[k].size()) +
                                  " entries, expected " + std::to_string(n + 1));
    }
  }
  DominationTable table;
  table.extend_to(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] != table.rows_[k]) {
      throw std::invalid_argument("DominationTable: row " + std::to_string(k + 1) +
                                  " does not satisfy the recurrence");
    }
  }
  return table;
}

void DominationTable::extend_to(std::size_t n_max) {
  rows_.reserve(n_max);
  while (rows_.size() < n_max) {
    if (rows_.size() < 3) {
      rows_.push_back(base_rows()[rows_.size()]);
    } else {
      rows_.push_back(next_row(rows_));
    }
  }
}

const Count& DominationTable::at(std::size_t n, std::size_t i) const {
  static const Count zero = 0;
  if (n < 1 || n > rows_.size()) {
    throw std::out_of_range("DominationTable::at: n=" + std::to_string(n) +
                            " outside 1.." + std::to_string(rows_.size()));
  }
  const auto& row = rows_[n - 1];
  return i < row.size() ? row[i] : zero;
}

std::span<const Count> DominationTable::row(std::size_t n) const {
  if (n < 1 || n > rows_.size()) {
    throw std::out_of_range("DominationTable::row: n=" + std::to_string(n));
  }
  return rows_[n - 1];
}

Count DominationTable::row_sum(std::size_t n) const {
  Count total = 0;
  for (const Count& c : row(n)) total += c;
  return total;
}

DominationTable build_table(std::size_t n_max) { return DominationTable(n_max); }

Count count(std::size_t n, std::size_t i) {
  if (n < 1) throw std::invalid_argument("count: n must be >= 1");
  if (i > n) return 0;
  return DominationTable(n).at(n, i);
}

DominationPolynomial polynomial(std::size_t n) {
  if (n < 1) throw std::invalid_argument("polynomial: n must be >= 1");
  // Ascending coefficient vectors of D(C_1), D(C_2), D(C_3).
  std::vector<std::vector<Count>> window = {{0, 1}, {0, 2, 1}, {0, 3, 3, 1}};
  if (n <= 3) return {n, window[n - 1]};
  for (std::size_t m = 4; m <= n; ++m) {
    // sum = D(C_{m-1}) + D(C_{m-2}) + D(C_{m-3}); then multiply by x.
    std::vector<Count> sum(window[2]);
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t p = 0; p < window[k].size(); ++p) sum[p] += window[k][p];
    }
    sum.insert(sum.begin(), Count{0});
    window[0] = std::move(window[1]);
    window[1] = std::move(window[2]);
    window[2] = std::move(sum);
  }
  return {n, window[2]};
}

Count total_count(std::size_t n) { return DominationTable(n).row_sum(n); }

}  // namespace dompoly
