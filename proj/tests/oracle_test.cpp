#include <gtest/gtest.h>

#include "dompoly/core.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/recurrence.hpp"
#include "table1.hpp"

using namespace dompoly;

namespace {
using Sets = std::vector<std::vector<Vertex>>;
Sets labels_of(const Family& f) {
  Sets out;
  for (const auto& s : f.members) out.emplace_back(s.labels().begin(), s.labels().end());
  return out;
}
}  // namespace

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(24, 12), 2704156u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
}

// The mask test and the label-based predicate are independent encodings.
TEST(MaskDominates, AgreesWithLabelPredicate) {
  for (std::size_t n = 3; n <= 14; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      std::vector<Vertex> labels;
      for (std::size_t v = 1; v <= n; ++v)
        if (m >> (v - 1) & 1) labels.push_back(static_cast<Vertex>(v));
      ASSERT_EQ(mask_dominates(n, m), is_dominating(CycleOrder{n}, VertexSet(CycleOrder{n}, labels)))
          << "n=" << n << " m=" << m;
    }
  }
}

TEST(EnumerateDominating, Examples) {
  EXPECT_EQ(labels_of(enumerate_dominating(5, 2)), (Sets{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}));
  EXPECT_TRUE(enumerate_dominating(4, 1).empty());
  EXPECT_EQ(labels_of(enumerate_dominating(6, 6)), (Sets{{1, 2, 3, 4, 5, 6}}));
  EXPECT_TRUE(enumerate_dominating(6, 0).empty());
}

TEST(EnumerateDominating, RotationClosed) {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      const Family f = enumerate_dominating(n, i);
      for (const auto& s : f.members) ASSERT_TRUE(f.contains(rotate(s, 1))) << s.to_string();
    }
  }
}

TEST(OracleCount, Examples) {
  EXPECT_EQ(oracle_count(7, 3), 14);
  EXPECT_EQ(oracle_count(16, 6), 56);
  EXPECT_EQ(oracle_count(9, 9), 1);
}

TEST(OracleCount, MatchesPublishedTable) {
  const auto& golden = testdata::table1();
  for (std::size_t n = 3; n <= 16; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      EXPECT_EQ(oracle_count(n, j), golden[n - 1][j - 1]) << "n=" << n << " j=" << j;
    }
  }
}

TEST(OraclePolynomial, Examples) {
  EXPECT_EQ(oracle_polynomial(4).to_string(), "x^4 + 4x^3 + 6x^2");
  EXPECT_EQ(oracle_polynomial(5).to_string(), "x^5 + 5x^4 + 10x^3 + 5x^2");
  EXPECT_EQ(oracle_polynomial(3).to_string(), "x^3 + 3x^2 + 3x");
}

TEST(OracleRow, PartitionDoesNotMatter) {
  for (unsigned threads : {1u, 2u, 3u, 7u}) {
    OracleLimits limits;
    limits.threads = threads;
    const OracleRow row = oracle_row(17, limits);
    EXPECT_EQ(row.examined, std::uint64_t{1} << 17);
    OracleLimits single;
    single.threads = 1;
    EXPECT_EQ(row.counts, oracle_row(17, single).counts) << threads;
  }
}

TEST(OracleRow, AgreesWithRecurrenceToEighteen) {
  const DominationTable t = build_table(18);
  for (std::size_t n = 3; n <= 18; ++n) {
    const DominationPolynomial p = oracle_polynomial(n);
    const auto row = t.row(n);
    ASSERT_TRUE(std::equal(row.begin(), row.end(), p.coeffs.begin(), p.coeffs.end())) << n;
  }
}

TEST(OracleLimits, ErrorsCarryEstimates) {
  EXPECT_THROW(oracle_count(2, 1), std::invalid_argument);
  EXPECT_THROW(oracle_count(5, 6), std::invalid_argument);
  try {
    oracle_count(25, 3);
    FAIL() << "expected OracleLimitError";
  } catch (const OracleLimitError& e) {
    EXPECT_EQ(e.estimate, std::uint64_t{1} << 25);
  }
  OracleLimits small;
  small.max_subsets = 100;
  try {
    oracle_count(10, 5, small);
    FAIL() << "expected OracleLimitError";
  } catch (const OracleLimitError& e) {
    EXPECT_EQ(e.estimate, 252u);
  }
  EXPECT_EQ(oracle_count(10, 1, small), 0);
  EXPECT_THROW(oracle_row(10, small), OracleLimitError);
}
