#include <gtest/gtest.h>

#include <cmath>

#include "pcs/cost.hpp"
#include "pcs/error.hpp"
#include "pcs/search.hpp"
#include "support.hpp"

namespace pcs {
namespace {

using testing::rel_diff;

const CostCoefficients kRef{10.0, 50.0, 250.0};

struct PublishedCase {
    int n;
    double shape;
    std::vector<int> removals;
    double cost;
};

// Published optima for m = 5, scale rate 1, k = (10, 50, 250).
const std::vector<PublishedCase> kPublished = {
    {15, 2.0, {0, 0, 0, 0, 10}, 110.4353},
    {15, 1.0, {0, 5, 0, 0, 5}, 183.9269},
    {15, 0.5, {0, 7, 0, 0, 3}, 476.1992},
    {20, 2.0, {4, 0, 0, 0, 11}, 108.7268},
    {20, 1.0, {10, 0, 0, 0, 5}, 177.8817},
    {20, 0.5, {0, 13, 0, 0, 2}, 455.4433},
};

TEST(TotalCostTest, MatchesPublishedOptima) {
    for (const auto& c : kPublished) {
        const CensoringScheme s(c.n, 5, c.removals);
        EXPECT_LT(rel_diff(total_cost(s, {c.shape, 1.0}, kRef), c.cost), 5e-3)
            << "n=" << c.n << " shape=" << c.shape;
    }
}

// 40-digit evaluations of the same closed forms, frozen.
TEST(TotalCostTest, FrozenHighPrecisionValues) {
    EXPECT_LT(rel_diff(total_cost(CensoringScheme(15, 5, {0, 0, 0, 0, 10}), {2.0, 1.0}, kRef),
                       110.43529306168593),
              1e-12);
    EXPECT_LT(rel_diff(total_cost(CensoringScheme(15, 5, {3, 3, 0, 0, 4}), {2.0, 1.0}, kRef),
                       114.99226711696292),
              1e-12);
}

TEST(TotalCostTest, BreakdownAddsUp) {
    const CensoringScheme s(20, 5, {7, 6, 0, 0, 2});
    const WeibullParams p{1.3, 0.7};
    const CostCoefficients k{3.0, 2.0, 40.0};
    const CostBreakdown b = cost_breakdown(s, p, k);
    EXPECT_EQ(b.failures, 5);
    EXPECT_DOUBLE_EQ(b.expected_duration, expected_duration(s, p));
    EXPECT_DOUBLE_EQ(b.integrated_variance, integrated_quantile_log_variance(s, p));
    EXPECT_NEAR(b.total, 3.0 * 5 + 2.0 * b.expected_duration + 40.0 * b.integrated_variance, 1e-12);
    EXPECT_DOUBLE_EQ(b.total, total_cost(s, p, k));
}

TEST(TotalCostTest, ValidatesCoefficients) {
    const CensoringScheme s(5, 2, {1, 2});
    const WeibullParams p{1.0, 1.0};
    EXPECT_THROW(total_cost(s, p, {0.0, 0.0, 0.0}), InvalidArgument);
    EXPECT_THROW(total_cost(s, p, {-1.0, 1.0, 1.0}), InvalidArgument);
    EXPECT_THROW(total_cost(s, p, {1.0, NAN, 1.0}), InvalidArgument);
    EXPECT_NO_THROW(total_cost(s, p, {0.0, 0.0, 1.0}));
}

TEST(ScaleTransformTest, Examples) {
    const auto [p, k] = scale_transform({2.0, 1.0}, kRef, 2.0);
    EXPECT_EQ(p.shape, 2.0);
    EXPECT_EQ(p.scale_rate, 0.5);
    EXPECT_EQ(k, (CostCoefficients{10.0, 25.0, 250.0}));
    const auto [p1, k1] = scale_transform({0.7, 3.0}, {1.0, 2.0, 3.0}, 1.0);
    EXPECT_EQ(p1.scale_rate, 3.0);
    EXPECT_EQ(k1, (CostCoefficients{1.0, 2.0, 3.0}));
    EXPECT_THROW(scale_transform({2.0, 1.0}, kRef, 0.0), InvalidArgument);
    EXPECT_THROW(scale_transform({2.0, 1.0}, kRef, -1.0), InvalidArgument);
}

TEST(ScaleTransformProperty, CostIsInvariant) {
    Rng rng(4242);
    for (int t = 0; t < 100; ++t) {
        const CensoringScheme s = testing::random_instance(2, 40, 10, rng);
        const WeibullParams p{0.35 + 2.5 * rng.uniform(), 0.2 + 3.0 * rng.uniform()};
        const CostCoefficients k{1.0 + 20.0 * rng.uniform(), 100.0 * rng.uniform(),
                                 500.0 * rng.uniform()};
        const double base = total_cost(s, p, k);
        for (double w : {0.5, 2.0, 10.0}) {
            const auto [pw, kw] = scale_transform(p, k, w);
            ASSERT_LT(rel_diff(total_cost(s, pw, kw), base), 1e-10) << "w=" << w;
        }
    }
}

TEST(ScaleTransformProperty, OptimalSchemeIsInvariant) {
    for (double shape : {0.5, 1.0, 2.0}) {
        const WeibullParams p{shape, 1.0};
        const auto base = exhaustive_optimum(14, 4, p, kRef);
        for (double w : {0.5, 2.0, 10.0}) {
            const auto [pw, kw] = scale_transform(p, kRef, w);
            const auto r = exhaustive_optimum(14, 4, pw, kw);
            EXPECT_EQ(r.best_scheme, base.best_scheme) << "shape=" << shape << " w=" << w;
            EXPECT_LT(rel_diff(r.best_cost, base.best_cost), 1e-10);
        }
    }
}

TEST(TotalCostProperty, MonotoneInEachCoefficient) {
    Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        const CensoringScheme s = testing::random_instance(2, 40, 10, rng);
        const WeibullParams p{0.35 + 2.5 * rng.uniform(), 0.5 + rng.uniform()};
        const CostCoefficients k{1.0 + rng.uniform(), 1.0 + rng.uniform(), 1.0 + rng.uniform()};
        const double base = total_cost(s, p, k);
        ASSERT_GT(total_cost(s, p, {k.k1 + 1.0, k.k2, k.k3}), base);
        ASSERT_GT(total_cost(s, p, {k.k1, k.k2 + 1.0, k.k3}), base);
        ASSERT_GT(total_cost(s, p, {k.k1, k.k2, k.k3 + 1.0}), base);
    }
}

TEST(TotalCostProperty, PositiveAndFinite) {
    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        const CensoringScheme s = testing::random_instance(1, 65, 15, rng);
        const WeibullParams p{0.3 + 3.0 * rng.uniform(), 0.1 + 3.0 * rng.uniform()};
        const double c = total_cost(s, p, kRef);
        ASSERT_TRUE(std::isfinite(c));
        ASSERT_GT(c, 10.0 * s.m());
    }
}

}  // namespace
}  // namespace pcs
