#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "typik/phi.hpp"

namespace typik {
namespace {

std::vector<Threshold> finite(std::initializer_list<std::int64_t> values) {
  std::vector<Threshold> out;
  for (auto v : values) out.push_back(Threshold::finite(v));
  return out;
}

TEST(Thresholds, LogisticSingleLevelSplitsAtZero) {
  EXPECT_EQ(compute_thresholds(PhiConfig::logistic(), 1, 0).thresholds(), finite({0}));
}

TEST(Thresholds, LogisticTwoLevels) {
  // 2 * ln(1/3) = -2.197..., 2 * ln(3) = 2.197...
  EXPECT_EQ(compute_thresholds(PhiConfig::logistic(), 2, 0).thresholds(), finite({-3, 2}));
}

TEST(Thresholds, ClampedLinearIdentity) {
  const PhiN pn = compute_thresholds(PhiConfig::clamped_linear({1, 1}, {0, 1}), 5, 3);
  EXPECT_EQ(pn.thresholds(), finite({500, 1500, 2500, 3500, 4500}));
}

TEST(Thresholds, FlatClampedLinearUsesInfiniteBounds) {
  // phi == 0.5: never above 1/2, always above 1/6.
  const PhiN half = compute_thresholds(PhiConfig::clamped_linear({0, 1}, {1, 2}), 3, 0);
  EXPECT_EQ(half.thresholds()[0], Threshold::neg_infinity());
  EXPECT_EQ(half.thresholds()[1], Threshold::pos_infinity());
  EXPECT_EQ(half.thresholds()[2], Threshold::pos_infinity());
  for (std::int64_t w : {-1000000, 0, 99999}) EXPECT_EQ(half.level(w), 1);
}

TEST(Thresholds, SaturatingClampedLinear) {
  // slope 2, offset 0: phi reaches 1 at x = 0.5; levels of n=4 at x = (2j-1)/16.
  const PhiN pn = compute_thresholds(PhiConfig::clamped_linear({2, 1}, {0, 1}), 4, 2);
  EXPECT_EQ(pn.thresholds(), finite({25, 75, 125, 175}));
}

TEST(Thresholds, AgreeWithDirectEvaluationAroundEveryBoundary) {
  const PhiConfig configs[] = {PhiConfig::logistic(), PhiConfig::logistic({3, 10}), PhiConfig::logistic({7, 1}),
                               PhiConfig::clamped_linear({1, 2}, {1, 4}),
                               PhiConfig::clamped_linear({3, 1}, {1, 3})};
  for (const auto& phi : configs) {
    for (int n : {1, 2, 3, 5, 9, 16}) {
      for (int k : {0, 1, 3}) {
        const PhiN pn = compute_thresholds(phi, n, k);
        for (std::size_t j = 0; j < pn.thresholds().size(); ++j) {
          const Threshold& t = pn.thresholds()[j];
          if (!t.is_finite()) continue;
          const int level = static_cast<int>(j) + 1;
          EXPECT_LT(phi_n_direct(phi, n, k, t.value()), level) << phi.to_string() << " n=" << n << " j=" << level;
          EXPECT_GE(phi_n_direct(phi, n, k, t.value() + 1), level) << phi.to_string() << " n=" << n;
          for (std::int64_t d = -2; d <= 2; ++d) {
            EXPECT_EQ(pn.level(t.value() + d), phi_n_direct(phi, n, k, t.value() + d));
          }
        }
      }
    }
  }
}

TEST(PhiN, TiesRoundDown) {
  // phi(0) = 1/2 is exactly the boundary for n = 1.
  EXPECT_EQ(phi_n_apply(compute_thresholds(PhiConfig::logistic(), 1, 0), 0), TruthDegree(0, 1));
  EXPECT_EQ(phi_n_direct(PhiConfig::logistic(), 1, 0, 0), 0);
  EXPECT_EQ(phi_n_apply(compute_thresholds(PhiConfig::logistic(), 2, 0), 0), TruthDegree(1, 2));
  // Identity clamp, n = 5, k = 3: W = 500 is phi = 0.1 = 1/(2n) exactly.
  const PhiN pn = compute_thresholds(PhiConfig::clamped_linear({1, 1}, {0, 1}), 5, 3);
  EXPECT_EQ(pn.level(500), 0);
  EXPECT_EQ(pn.level(501), 1);
  EXPECT_EQ(phi_n_direct(PhiConfig::clamped_linear({1, 1}, {0, 1}), 5, 3, 500), 0);
}

TEST(PhiN, RandomSumsMatchDirectEvaluation) {
  std::mt19937_64 rng(3);
  const PhiConfig configs[] = {PhiConfig::logistic(), PhiConfig::logistic({1, 2}),
                               PhiConfig::clamped_linear({1, 1}, {1, 2})};
  for (const auto& phi : configs) {
    for (int n : {1, 3, 5, 9}) {
      const PhiN pn = compute_thresholds(phi, n, 2);
      std::uniform_int_distribution<std::int64_t> w(-1500 * n, 1500 * n);
      for (int i = 0; i < 300; ++i) {
        const std::int64_t x = w(rng);
        ASSERT_EQ(pn.level(x), phi_n_direct(phi, n, 2, x)) << phi.to_string() << " n=" << n << " w=" << x;
        const double exact = phi_evaluate(phi, static_cast<double>(x) / (n * 100.0));
        EXPECT_LE(std::abs(pn.level(x) / static_cast<double>(n) - exact), 0.5 / n + 1e-12);
      }
    }
  }
}

TEST(PhiN, LevelsAreMonotone) {
  const PhiN pn = compute_thresholds(PhiConfig::logistic({1, 3}), 9, 1);
  int previous = 0;
  for (std::int64_t w = -2000; w <= 2000; ++w) {
    const int level = pn.level(w);
    ASSERT_GE(level, previous);
    previous = level;
  }
  EXPECT_EQ(pn.level(-2000), 0);
  EXPECT_EQ(pn.level(2000), 9);
}

TEST(PhiN, RejectsBadThresholdLists) {
  EXPECT_THROW(PhiN(2, 0, finite({1})), std::exception);
  EXPECT_THROW(PhiN(2, 0, finite({3, 1})), std::exception);
}

TEST(Threshold, OrdersInfinitiesAroundFiniteValues) {
  EXPECT_LT(Threshold::neg_infinity(), Threshold::finite(-1000));
  EXPECT_LT(Threshold::finite(1000), Threshold::pos_infinity());
  EXPECT_TRUE(Threshold::neg_infinity().exceeded_by(INT64_MIN));
  EXPECT_FALSE(Threshold::pos_infinity().exceeded_by(INT64_MAX));
  EXPECT_EQ(Threshold::neg_infinity().to_string(), "-inf");
  EXPECT_EQ(Threshold::finite(-3).to_string(), "-3");
}

TEST(PhiEvaluate, MatchesClosedForms) {
  EXPECT_DOUBLE_EQ(phi_evaluate(PhiConfig::logistic(), 0.0), 0.5);
  EXPECT_NEAR(phi_evaluate(PhiConfig::logistic({2, 1}), 1.0), 1.0 / (1.0 + std::exp(-2.0)), 1e-15);
  EXPECT_DOUBLE_EQ(phi_evaluate(PhiConfig::clamped_linear({1, 1}, {1, 2}), 0.7), 1.0);
  EXPECT_DOUBLE_EQ(phi_evaluate(PhiConfig::clamped_linear({1, 1}, {1, 2}), -0.2), 0.3);
}

}  // namespace
}  // namespace typik
