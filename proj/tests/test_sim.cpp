#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "pcs/error.hpp"
#include "pcs/model.hpp"
#include "pcs/sim.hpp"
#include "support.hpp"

namespace pcs {
namespace {

TEST(GenerateTest, StrictlyIncreasingAndDeterministic) {
    const CensoringScheme s(20, 5, {7, 6, 0, 0, 2});
    Rng a(11), b(11);
    for (int t = 0; t < 500; ++t) {
        const auto x = generate_experiment(s, {1.4, 0.8}, a);
        const auto y = generate_experiment(s, {1.4, 0.8}, b);
        ASSERT_EQ(x.failure_times, y.failure_times);
        ASSERT_EQ(x.failure_times.size(), 5u);
        ASSERT_GT(x.failure_times.front(), 0.0);
        for (std::size_t i = 1; i < 5; ++i) ASSERT_GT(x.failure_times[i], x.failure_times[i - 1]);
    }
}

TEST(GenerateTest, FirstFailureFollowsSampleMinimumLaw) {
    // Kolmogorov-Smirnov against 1 - (1 - F)^15
    const CensoringScheme s(15, 5, {3, 3, 0, 0, 4});
    const WeibullParams p{2.0, 1.0};
    Rng rng(404);
    const int n = 4000;
    std::vector<double> y(n);
    for (auto& v : y) v = generate_experiment(s, p, rng).failure_times.front();
    std::sort(y.begin(), y.end());
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
        const double f = 1.0 - std::pow(1.0 - p.cdf(y[static_cast<std::size_t>(i)]), 15.0);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    // alpha = 0.001 critical value
    EXPECT_LT(d, 1.95 / std::sqrt(static_cast<double>(n)));
}

TEST(MonteCarloTest, UnitExponential) {
    const auto e = monte_carlo_duration(CensoringScheme(1, 1, {0}), {1.0, 1.0}, 100000, 7);
    EXPECT_EQ(e.replications, 100000u);
    EXPECT_NEAR(e.mean, 1.0, 3.0 * e.standard_error);
    EXPECT_NEAR(e.standard_error, 1.0 / std::sqrt(100000.0), 2e-4);
}

TEST(MonteCarloTest, RayleighMean) {
    const auto e = monte_carlo_duration(CensoringScheme(1, 1, {0}), {2.0, 1.0}, 100000, 8);
    EXPECT_NEAR(e.mean, 0.886226925452758, 3.0 * e.standard_error);
}

TEST(MonteCarloTest, AgreesWithClosedForm) {
    const CensoringScheme s(20, 5, {7, 6, 0, 0, 2});
    for (double shape : {0.5, 1.0, 2.0}) {
        const WeibullParams p{shape, 1.0};
        const auto e = monte_carlo_duration(s, p, 100000, 2024, 4);
        EXPECT_NEAR(e.mean, expected_duration(s, p), 3.0 * e.standard_error) << "shape=" << shape;
    }
}

TEST(MonteCarloTest, CompleteSampleMaximum) {
    // m = n, exponential: E[max] = H_n
    for (int n : {3, 10}) {
        double h = 0.0;
        for (int i = 1; i <= n; ++i) h += 1.0 / i;
        const CensoringScheme s = CensoringScheme::type_ii(n, n);
        EXPECT_NEAR(expected_duration(s, {1.0, 1.0}), h, 1e-12);
        const auto e = monte_carlo_duration(s, {1.0, 1.0}, 50000, 3);
        EXPECT_NEAR(e.mean, h, 3.0 * e.standard_error);
    }
}

TEST(MonteCarloTest, DeterministicForFixedSeedAndWorkers) {
    const CensoringScheme s(15, 5, {3, 3, 0, 0, 4});
    const auto a = monte_carlo_duration(s, {1.0, 1.0}, 20000, 9, 3);
    const auto b = monte_carlo_duration(s, {1.0, 1.0}, 20000, 9, 3);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.standard_error, b.standard_error);
    const auto c = monte_carlo_duration(s, {1.0, 1.0}, 20000, 10, 3);
    EXPECT_NE(a.mean, c.mean);
}

TEST(MonteCarloTest, RequiresEnoughReplications) {
    EXPECT_THROW(monte_carlo_duration(CensoringScheme(1, 1, {0}), {1.0, 1.0}, 999, 1), InvalidArgument);
}

TEST(MonteCarloProperty, EarlyRemovalLengthensTheTest) {
    // withdrawing units early leaves fewer at risk, so the last failure comes later
    const WeibullParams p{1.0, 1.0};
    const auto early = monte_carlo_duration(CensoringScheme::one_step(20, 5, 1), p, 20000, 1);
    const auto late = monte_carlo_duration(CensoringScheme::type_ii(20, 5), p, 20000, 1);
    EXPECT_GT(early.mean - late.mean, 3.0 * std::hypot(early.standard_error, late.standard_error));
}

TEST(MonteCarloProperty, RandomSchemesWithinThreeStandardErrors) {
    Rng rng(1234);
    int misses = 0;
    for (int t = 0; t < 6; ++t) {
        const CensoringScheme s = testing::random_instance(2, 40, 10, rng);
        const WeibullParams p{0.5 + 2.0 * rng.uniform(), 0.5 + rng.uniform()};
        const auto e = monte_carlo_duration(s, p, 50000, 100 + static_cast<std::uint64_t>(t), 2);
        if (std::fabs(e.mean - expected_duration(s, p)) > 3.0 * e.standard_error) ++misses;
    }
    EXPECT_EQ(misses, 0);
}

}  // namespace
}  // namespace pcs
