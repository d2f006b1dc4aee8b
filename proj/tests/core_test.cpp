#include <random>

#include <gtest/gtest.h>

#include "dompoly/core.hpp"

using namespace dompoly;

namespace {

VertexSet from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Vertex> labels;
  for (std::size_t v = 1; v <= n; ++v)
    if (mask >> (v - 1) & 1u) labels.push_back(static_cast<Vertex>(v));
  return VertexSet(CycleOrder{n}, labels);
}

/// Largest cyclic distance between consecutive chosen labels.
std::size_t max_gap(const VertexSet& s) {
  const auto labels = s.labels();
  const std::size_t n = s.order();
  std::size_t gap = labels.front() + n - labels.back();
  for (std::size_t k = 1; k < labels.size(); ++k) {
    gap = std::max<std::size_t>(gap, labels[k] - labels[k - 1]);
  }
  return gap;
}

}  // namespace

TEST(VertexSet, CanonicalisesAndValidates) {
  VertexSet s(CycleOrder{6}, {4, 1});
  EXPECT_EQ(s.to_string(), "{1,4}");
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(2));
  EXPECT_THROW(VertexSet(CycleOrder{6}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(VertexSet(CycleOrder{6}, {0, 2}), std::invalid_argument);
  EXPECT_THROW(VertexSet(CycleOrder{6}, {7}), std::invalid_argument);
}

TEST(VertexSet, ExtendedKeepsOrder) {
  VertexSet s(CycleOrder{4}, {1, 3});
  VertexSet t = s.extended(CycleOrder{6}, 2);
  EXPECT_EQ(t.to_string(), "{1,2,3}");
  EXPECT_EQ(t.order(), CycleOrder{6});
  EXPECT_THROW((void)s.extended(CycleOrder{6}, 3), std::invalid_argument);
  EXPECT_THROW((void)s.extended(CycleOrder{6}, 7), std::invalid_argument);
}

TEST(IsDominating, Examples) {
  EXPECT_TRUE(is_dominating(CycleOrder{3}, VertexSet(CycleOrder{3}, {2})));
  EXPECT_TRUE(is_dominating(CycleOrder{5}, VertexSet(CycleOrder{5}, {1, 3})));
  // 4 and 5 have no neighbour in {1,2}.
  EXPECT_FALSE(is_dominating(CycleOrder{6}, VertexSet(CycleOrder{6}, {1, 2})));
  EXPECT_FALSE(is_dominating(CycleOrder{4}, VertexSet(CycleOrder{4}, std::vector<Vertex>{})));
}

TEST(IsDominating, RejectsDegenerateCycles) {
  EXPECT_THROW(is_dominating(CycleOrder{2}, VertexSet(CycleOrder{2}, {1})), std::invalid_argument);
  EXPECT_THROW(is_dominating(CycleOrder{5}, VertexSet(CycleOrder{4}, {1})), std::invalid_argument);
}

TEST(GammaCycle, Examples) {
  EXPECT_EQ(gamma_cycle(CycleOrder{3}), 1u);
  EXPECT_EQ(gamma_cycle(CycleOrder{10}), 4u);
  EXPECT_EQ(gamma_cycle(CycleOrder{16}), 6u);
  EXPECT_EQ(gamma_cycle(CycleOrder{1}), 1u);
  EXPECT_THROW(gamma_cycle(CycleOrder{0}), std::invalid_argument);
}

TEST(Rotate, Examples) {
  const CycleOrder six{6};
  EXPECT_EQ(rotate(VertexSet(six, {1, 4}), 1), VertexSet(six, {2, 5}));
  EXPECT_EQ(rotate(VertexSet(six, {3, 6}), 1), VertexSet(six, {1, 4}));
  EXPECT_EQ(rotate(VertexSet(six, {2, 5}), 0), VertexSet(six, {2, 5}));
  EXPECT_EQ(rotate(VertexSet(six, {2, 5}), -1), VertexSet(six, {1, 4}));
  EXPECT_EQ(rotate(VertexSet(six, {2, 5}), 13), VertexSet(six, {3, 6}));
}

TEST(DominationProperties, RotationInvariantRandom) {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 3 + rng() % 28;
    const auto mask = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u);
    const VertexSet s = from_mask(n, mask);
    const CycleOrder order{n};
    const long long k = static_cast<long long>(rng() % 100) - 50;
    EXPECT_EQ(is_dominating(order, s), is_dominating(order, rotate(s, k)))
        << s.to_string() << " k=" << k;
  }
}

TEST(DominationProperties, MonotoneUnderSupersets) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 3 + rng() % 20;
    const std::uint32_t full = (1u << n) - 1u;
    const std::uint32_t a = rng() & full;
    const std::uint32_t b = a | (rng() & full);
    if (is_dominating(CycleOrder{n}, from_mask(n, a))) {
      EXPECT_TRUE(is_dominating(CycleOrder{n}, from_mask(n, b)));
    }
  }
}

// Exhaustive for n <= 15: nothing below ceil(n/3) dominates, and a nonempty
// set dominates exactly when no two consecutive chosen vertices are more
// than 3 apart around the cycle.
TEST(DominationProperties, ExhaustiveLowerBoundAndGapLaw) {
  for (std::size_t n = 3; n <= 15; ++n) {
    const CycleOrder order{n};
    bool saw_minimum = false;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const VertexSet s = from_mask(n, mask);
      const bool dom = is_dominating(order, s);
      if (s.size() < gamma_cycle(order)) ASSERT_FALSE(dom) << s.to_string();
      ASSERT_EQ(dom, max_gap(s) <= 3) << "n=" << n << " " << s.to_string();
      saw_minimum |= dom && s.size() == gamma_cycle(order);
    }
    EXPECT_TRUE(saw_minimum) << "n=" << n;
  }
}
