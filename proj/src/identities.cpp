#include "dompoly/identities.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dompoly {

namespace {

constexpr std::array<std::string_view, 11> kNames{"I",  "II",  "III", "IV", "V",  "VI",
                                                  "VII", "VIII", "IX", "X",  "XI"};

std::string span_text(std::string_view var, std::size_t lo, std::size_t hi) {
  if (lo > hi) return std::string(var) + " in empty range";
  return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

/// Records the first mismatch only.
class Verdict {
 public:
  explicit Verdict(IdentityCheck& check) : check_(check) {}

  void expect(std::size_t n, std::size_t i, const Count& expected, const Count& actual) {
    if (expected != actual) fail(n, i, to_decimal(expected), to_decimal(actual));
  }
  void fail(std::size_t n, std::size_t i, std::string expected, std::string actual) {
    if (!check_.pass) return;
    check_.pass = false;
    check_.counterexample = Counterexample{n, i, std::move(expected), std::move(actual)};
  }

 private:
  IdentityCheck& check_;
};

/// numerator / denominator, or nullopt when the division is inexact.
std::optional<Count> exact_div(const Count& numerator, unsigned denominator) {
  if (numerator % denominator != 0) return std::nullopt;
  return numerator / denominator;
}

void check_formula(Verdict& v, std::size_t n, std::size_t i, const Count& numerator,
                   unsigned denominator, const Count& actual) {
  if (auto q = exact_div(numerator, denominator)) {
    v.expect(n, i, *q, actual);
  } else {
    v.fail(n, i, to_decimal(numerator) + "/" + std::to_string(denominator) + " (not an integer)",
           to_decimal(actual));
  }
}

/// Sum of column j over rows lo..hi (rows outside 1..n_max contribute zero).
Count column_sum(const DominationTable& t, std::size_t j, std::size_t lo, std::size_t hi) {
  Count s = 0;
  for (std::size_t r = std::max<std::size_t>(lo, 1); r <= hi; ++r) s += t.at(r, j);
  return s;
}

/// First break of the strict chain in column k, as (row, expected, actual).
std::optional<Counterexample> chain_break(const DominationTable& t, std::size_t k) {
  if (t.at(k, k) != 1) return Counterexample{k, k, "1", to_decimal(t.at(k, k))};
  for (std::size_t r = k; r < 2 * k; ++r) {
    if (!(t.at(r, k) < t.at(r + 1, k))) {
      return Counterexample{r + 1, k, "> " + to_decimal(t.at(r, k)),
                            to_decimal(t.at(r + 1, k))};
    }
  }
  for (std::size_t r = 2 * k; r < 3 * k; ++r) {
    if (!(t.at(r, k) > t.at(r + 1, k))) {
      return Counterexample{r + 1, k, "< " + to_decimal(t.at(r, k)),
                            to_decimal(t.at(r + 1, k))};
    }
  }
  if (t.at(3 * k, k) != 3) return Counterexample{3 * k, k, "3", to_decimal(t.at(3 * k, k))};
  return std::nullopt;
}

}  // namespace

std::string_view roman(IdentityId id) { return kNames.at(static_cast<std::size_t>(id) - 1); }

IdentityId parse_identity(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    if (kNames[k] == upper) return static_cast<IdentityId>(k + 1);
  }
  throw std::invalid_argument("unknown identity '" + std::string(text) + "'");
}

IdentityCheck check_identity(IdentityId id, std::size_t n_max, DominationTable& t) {
  if (n_max < 1) throw std::invalid_argument("check_identity: n_max must be >= 1");
  t.extend_to(n_max);
  IdentityCheck check;
  check.id = id;
  Verdict v(check);
  const std::size_t N = n_max;

  switch (id) {
    case IdentityId::I:
      check.range = span_text("k", 1, N / 3);
      for (std::size_t k = 1; 3 * k <= N; ++k) v.expect(3 * k, k, 3, t.at(3 * k, k));
      break;
    case IdentityId::II:
      check.range = span_text("n", 4, N);
      check.note = "holds by construction of the table; certified against the exhaustive oracle";
      break;
    case IdentityId::III:
      check.range = span_text("k", 1, N < 2 ? 0 : (N - 2) / 3);
      for (std::size_t k = 1; 3 * k + 2 <= N; ++k) {
        v.expect(3 * k + 2, k + 1, 3 * k + 2, t.at(3 * k + 2, k + 1));
      }
      break;
    case IdentityId::IV:
      check.range = span_text("k", 1, N < 1 ? 0 : (N - 1) / 3);
      for (std::size_t k = 1; 3 * k + 1 <= N; ++k) {
        const Count kk = k;
        check_formula(v, 3 * k + 1, k + 1, kk * (3 * kk + 7) + 2, 2, t.at(3 * k + 1, k + 1));
      }
      break;
    case IdentityId::V:
      check.range = span_text("n", 3, N);
      for (std::size_t n = 3; n <= N; ++n) v.expect(n, n, 1, t.at(n, n));
      break;
    case IdentityId::VI:
      check.range = span_text("n", 3, N);
      for (std::size_t n = 3; n <= N; ++n) v.expect(n, n - 1, n, t.at(n, n - 1));
      break;
    case IdentityId::VII:
      check.range = span_text("n", 3, N);
      for (std::size_t n = 3; n <= N; ++n) {
        const Count c = n;
        check_formula(v, n, n - 2, (c - 1) * c, 2, t.at(n, n - 2));
      }
      break;
    case IdentityId::VIII:
      check.range = span_text("n", 4, N);
      for (std::size_t n = 4; n <= N; ++n) {
        const Count c = n;
        check_formula(v, n, n - 3, (c - 4) * c * (c + 1), 6, t.at(n, n - 3));
      }
      break;
    case IdentityId::IX:
      check.range = span_text("j", 3, N / 3);
      if (N / 3 >= 3) check.note = "stated for j >= 4; j = 3 checked as well";
      for (std::size_t j = 3; 3 * j <= N; ++j) {
        const Count lhs = column_sum(t, j, j, 3 * j);
        const Count rhs = 3 * column_sum(t, j - 1, j - 1, 3 * j - 3);
        v.expect(3 * j, j, rhs, lhs);
      }
      break;
    case IdentityId::X: {
      check.range = span_text("k", 3, N / 3);
      std::vector<std::size_t> broken;
      for (std::size_t k = 3; 3 * k <= N; ++k) {
        if (auto ce = chain_break(t, k)) {
          broken.push_back(k);
          v.fail(ce->n, ce->i, ce->expected, ce->actual);
        }
      }
      if (!broken.empty()) {
        check.note = "strict chain breaks for k in {";
        for (std::size_t b = 0; b < broken.size(); ++b) {
          check.note += (b ? "," : "") + std::to_string(broken[b]);
        }
        check.note += "}; holds for every other k in " + span_text("k", 3, N / 3);
      }
      break;
    }
    case IdentityId::XI: {
      check.range = span_text("n", 1, N);
      const std::array<Count, 3> initial{1, 3, 7};
      for (std::size_t n = 1; n <= std::min<std::size_t>(3, N); ++n) {
        v.expect(n, 0, initial[n - 1], t.row_sum(n));
      }
      for (std::size_t n = 4; n <= N; ++n) {
        v.expect(n, 0, t.row_sum(n - 1) + t.row_sum(n - 2) + t.row_sum(n - 3), t.row_sum(n));
      }
      break;
    }
  }
  return check;
}

IdentityCheck check_identity(IdentityId id, std::size_t n_max) {
  DominationTable table(std::max<std::size_t>(n_max, 1));
  return check_identity(id, n_max, table);
}

std::vector<IdentityCheck> check_all(std::size_t n_max) {
  if (n_max < 9) throw std::invalid_argument("check_all: n_max must be >= 9");
  DominationTable table(n_max);
  std::vector<IdentityCheck> out;
  out.reserve(kAllIdentities.size());
  for (IdentityId id : kAllIdentities) out.push_back(check_identity(id, n_max, table));
  return out;
}

}  // namespace dompoly
