#include <gtest/gtest.h>

#include "dompoly/core.hpp"
#include "dompoly/recurrence.hpp"
#include "table1.hpp"

using namespace dompoly;

TEST(BuildTable, Examples) {
  const DominationTable t4 = build_table(4);
  EXPECT_EQ(t4.at(4, 1), 0);
  EXPECT_EQ(t4.at(4, 2), 6);
  EXPECT_EQ(t4.at(4, 3), 4);
  EXPECT_EQ(t4.at(4, 4), 1);
  EXPECT_EQ(build_table(16).at(16, 9), 4096);
  EXPECT_EQ(build_table(5).at(5, 2), 5);
}

TEST(BuildTable, RejectsEmpty) {
  EXPECT_THROW(build_table(0), std::invalid_argument);
  EXPECT_THROW((void)build_table(3).at(4, 1), std::out_of_range);
}

TEST(BuildTable, ReproducesPublishedRows) {
  const DominationTable t = build_table(16);
  const auto& golden = testdata::table1();
  for (std::size_t n = 1; n <= 16; ++n) {
    ASSERT_EQ(t.row(n).size(), n + 1);
    EXPECT_EQ(t.at(n, 0), 0) << "n=" << n;
    for (std::size_t j = 1; j <= n; ++j) {
      EXPECT_EQ(t.at(n, j), golden[n - 1][j - 1]) << "n=" << n << " j=" << j;
    }
  }
}

TEST(BuildTable, WindowLawAndDiagonal) {
  const DominationTable t = build_table(120);
  for (std::size_t n = 1; n <= 120; ++n) {
    const std::size_t lo = gamma_cycle(CycleOrder{n});
    for (std::size_t i = 0; i <= n + 2; ++i) {
      const bool in_window = i >= lo && i <= n;
      EXPECT_EQ(t.at(n, i) != 0, in_window) << "n=" << n << " i=" << i;
    }
    EXPECT_EQ(t.at(n, n), 1);
  }
}

TEST(BuildTable, ExtensionMatchesFreshBuild) {
  DominationTable t(10);
  t.extend_to(5);
  EXPECT_EQ(t.n_max(), 10u);
  t.extend_to(60);
  EXPECT_EQ(t, build_table(60));
}

TEST(BuildTable, LeadingCoefficients) {
  const DominationTable t = build_table(150);
  for (std::size_t n = 3; n <= 150; ++n) {
    EXPECT_EQ(t.at(n, n - 1), n);
    EXPECT_EQ(t.at(n, n - 2), Count(n) * (n - 1) / 2);
  }
}

TEST(Count, Examples) {
  EXPECT_EQ(count(7, 3), 14);
  EXPECT_EQ(count(9, 2), 0);
  EXPECT_EQ(count(20, 20), 1);
  EXPECT_EQ(count(20, 25), 0);
}

TEST(Polynomial, Examples) {
  EXPECT_EQ(polynomial(3).to_string(), "x^3 + 3x^2 + 3x");
  EXPECT_EQ(polynomial(6).to_string(), "x^6 + 6x^5 + 15x^4 + 14x^3 + 3x^2");
  EXPECT_EQ(polynomial(1).to_string(), "x");
  EXPECT_EQ(polynomial(2).to_string(), "x^2 + 2x");
  EXPECT_THROW(polynomial(0), std::invalid_argument);
}

// The polynomial recurrence and the coefficient table are computed separately.
TEST(Polynomial, AgreesWithTableRows) {
  const DominationTable t = build_table(200);
  for (std::size_t n = 1; n <= 200; ++n) {
    const DominationPolynomial p = polynomial(n);
    ASSERT_EQ(p.degree(), n);
    const auto row = t.row(n);
    ASSERT_TRUE(std::equal(row.begin(), row.end(), p.coeffs.begin(), p.coeffs.end())) << n;
  }
}

TEST(TotalCount, Examples) {
  EXPECT_EQ(total_count(1), 1);
  EXPECT_EQ(total_count(3), 7);
  EXPECT_EQ(total_count(4), 11);  // 0 + 6 + 4 + 1
}

TEST(TotalCount, TribonacciAndEvaluation) {
  std::vector<Count> s{0};
  for (std::size_t n = 1; n <= 200; ++n) s.push_back(total_count(n));
  for (std::size_t n = 4; n <= 200; ++n) EXPECT_EQ(s[n], s[n - 1] + s[n - 2] + s[n - 3]) << n;
  for (std::size_t n = 1; n <= 200; n += 7) EXPECT_EQ(polynomial(n).evaluate(1), s[n]) << n;
  // Grows past 64 bits well before n = 200.
  EXPECT_GT(s[200], Count(std::numeric_limits<std::uint64_t>::max()));
}
