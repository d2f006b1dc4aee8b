#include <gtest/gtest.h>

#include "dompoly/genfunc.hpp"
#include "table1.hpp"

using namespace dompoly;

TEST(Expand, LowOrderCoefficients) {
  const BivariateSeries s = expand(6);
  EXPECT_EQ(s.coefficient(4, 2), 6);
  EXPECT_EQ(s.coefficient(4, 4), 1);
  EXPECT_EQ(s.coefficient(5, 3), 10);
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(s.coefficient(n, i), 0);
  EXPECT_EQ(s.coefficient(4, 9), 0);
  EXPECT_THROW(expand(3), std::invalid_argument);
}

TEST(GfCoefficient, Examples) {
  EXPECT_EQ(gf_coefficient(10, 4), 25);
  EXPECT_EQ(gf_coefficient(4, 1), 0);
  EXPECT_EQ(gf_coefficient(14, 8), 1372);
  EXPECT_THROW(gf_coefficient(3, 1), std::invalid_argument);
}

TEST(Expand, MatchesPublishedRows) {
  const BivariateSeries s = expand(16);
  const auto& golden = testdata::table1();
  for (std::size_t n = 4; n <= 16; ++n)
    for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(s.coefficient(n, j), golden[n - 1][j - 1]);
}

TEST(Expand, AgreesWithRecurrenceToThirty) {
  DominationTable table(1);
  EXPECT_TRUE(compare_with_table(expand(30), table).empty());
  EXPECT_EQ(table.n_max(), 30u);
}

TEST(Expand, NoCoefficientAboveDiagonal) {
  const BivariateSeries s = expand(40);
  for (std::size_t n = 4; n <= 40; ++n) EXPECT_EQ(s.row(n).size(), n + 1);
}

// From u^7 on the numerator contributes nothing, so both the coefficients and
// their v = 1 row sums follow the bare three-term recurrence.
TEST(Expand, PureRecurrenceBeyondNumerator) {
  const BivariateSeries s = expand(60);
  std::vector<Count> sums;
  for (std::size_t n = 0; n <= 60; ++n) {
    Count total = 0;
    for (const Count& c : s.row(n)) total += c;
    sums.push_back(total);
  }
  for (std::size_t n = 7; n <= 60; ++n) {
    EXPECT_EQ(sums[n], sums[n - 1] + sums[n - 2] + sums[n - 3]) << n;
    for (std::size_t i = 1; i <= n; ++i) {
      EXPECT_EQ(s.coefficient(n, i), s.coefficient(n - 1, i - 1) + s.coefficient(n - 2, i - 1) +
                                         s.coefficient(n - 3, i - 1));
    }
  }
}

TEST(Numerator, BoundaryTermsGiveTheNumerator) {
  const auto derived = boundary_numerator();
  ASSERT_EQ(derived.size(), kNumerator.size());
  for (std::size_t k = 0; k < derived.size(); ++k) {
    EXPECT_EQ(derived[k].u_power, kNumerator[k].u_power);
    EXPECT_EQ(derived[k].v_power, kNumerator[k].v_power);
    EXPECT_EQ(derived[k].value, kNumerator[k].value);
  }
}

// 3u and u^2 instead of 5u and 3u^2: off from n = 5 on.
TEST(Numerator, PublishedFormDisagrees) {
  DominationTable table(1);
  const auto diffs = compare_with_table(expand(30, kPublishedNumerator), table);
  ASSERT_FALSE(diffs.empty());
  EXPECT_EQ(diffs.front().n, 5u);
  EXPECT_EQ(diffs.front().i, 2u);
  EXPECT_EQ(diffs.front().series, 3);
  EXPECT_EQ(diffs.front().table, 5);
  for (const auto& d : diffs) EXPECT_GE(d.n, 5u);
  EXPECT_EQ(expand(30, kPublishedNumerator).coefficient(4, 3), 4);
}
