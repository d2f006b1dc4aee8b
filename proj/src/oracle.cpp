#include "dompoly/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <thread>

namespace dompoly {

namespace {

constexpr std::size_t kMaskBits = 63;

void check_order(std::size_t n, const OracleLimits& limits) {
  if (n < 3) throw std::invalid_argument("oracle: n must be >= 3");
  if (n > limits.max_n || n > kMaskBits) {
    throw OracleLimitError("oracle: n=" + std::to_string(n) + " exceeds max_n=" +
                               std::to_string(std::min(limits.max_n, kMaskBits)),
                           n >= 64 ? std::numeric_limits<std::uint64_t>::max()
                                   : std::uint64_t{1} << n);
  }
}

void check_budget(std::uint64_t subsets, const OracleLimits& limits, std::size_t n,
                  const std::string& what) {
  if (subsets > limits.max_subsets) {
    throw OracleLimitError("oracle: " + what + " for n=" + std::to_string(n) + " needs " +
                               std::to_string(subsets) + " subsets, budget is " +
                               std::to_string(limits.max_subsets),
                           subsets);
  }
}

/// Visits the i-subsets of an n-bit universe in increasing mask order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t i, Visit&& visit) {
  if (i > n) return;
  if (i == 0) {
    visit(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t m = (std::uint64_t{1} << i) - 1;
  while (m < limit) {
    visit(m);
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t ripple = m + low;
    m = ripple | (((m ^ ripple) >> 2) / low);
  }
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count acc = 1;
  for (std::size_t j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
  if (acc > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

bool mask_dominates(std::size_t n, std::uint64_t mask) {
  const std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  mask &= full;
  const std::uint64_t left = ((mask << 1) | (mask >> (n - 1))) & full;
  const std::uint64_t right = ((mask >> 1) | (mask << (n - 1))) & full;
  return (mask | left | right) == full;
}

Family enumerate_dominating(std::size_t n, std::size_t i, const OracleLimits& limits) {
  check_order(n, limits);
  if (i > n) throw std::invalid_argument("enumerate_dominating: i > n");
  check_budget(binomial(n, i), limits, n, "enumerating i=" + std::to_string(i));
  Family family{n, i, {}};
  for_each_subset(n, i, [&](std::uint64_t m) {
    if (!mask_dominates(n, m)) return;
    std::vector<Vertex> labels;
    labels.reserve(i);
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      labels.push_back(static_cast<Vertex>(std::countr_zero(rest) + 1));
    }
    family.members.emplace_back(CycleOrder{n}, std::move(labels));
  });
  std::sort(family.members.begin(), family.members.end());
  return family;
}

Count oracle_count(std::size_t n, std::size_t i, const OracleLimits& limits) {
  check_order(n, limits);
  if (i > n) throw std::invalid_argument("oracle_count: i > n");
  check_budget(binomial(n, i), limits, n, "counting i=" + std::to_string(i));
  std::uint64_t hits = 0;
  for_each_subset(n, i, [&](std::uint64_t m) { hits += mask_dominates(n, m); });
  return hits;
}

OracleRow oracle_row(std::size_t n, const OracleLimits& limits) {
  check_order(n, limits);
  const std::uint64_t total = std::uint64_t{1} << n;
  check_budget(total, limits, n, "full row");

  unsigned workers = limits.threads ? limits.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);
  if (total < (std::uint64_t{1} << 12)) workers = 1;

  struct Partial {
    std::vector<std::uint64_t> hits;
    std::uint64_t examined = 0;
  };
  std::vector<Partial> partials(workers, Partial{std::vector<std::uint64_t>(n + 1), 0});
  const auto scan = [n](std::uint64_t begin, std::uint64_t end, Partial& out) {
    for (std::uint64_t m = begin; m < end; ++m) {
      if (mask_dominates(n, m)) ++out.hits[std::popcount(m)];
    }
    out.examined = end - begin;
  };

  const std::uint64_t chunk = total / workers;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = chunk * w;
    const std::uint64_t end = w + 1 == workers ? total : begin + chunk;
    if (w + 1 == workers) {
      scan(begin, end, partials[w]);
    } else {
      pool.emplace_back(scan, begin, end, std::ref(partials[w]));
    }
  }
  for (auto& t : pool) t.join();

  OracleRow row;
  row.counts.assign(n + 1, Count{0});
  for (const Partial& p : partials) {
    for (std::size_t i = 0; i <= n; ++i) row.counts[i] += p.hits[i];
    row.examined += p.examined;
  }
  return row;
}

DominationPolynomial oracle_polynomial(std::size_t n, const OracleLimits& limits) {
  return {n, oracle_row(n, limits).counts};
}

}  // namespace dompoly
