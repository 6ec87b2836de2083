#include "walklt/oracle.hpp"

#include "walklt/combinatorics.hpp"

#include "path_counting.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace walklt {
namespace {

TEST(EnumerateExact, ForcedFirstStep) {
    const auto e = enumerate_exact(WalkKind::reflected, 1, 0);
    ASSERT_EQ(e.size(), 1u);
    const auto& cell = e.at(Cell{1, 0});
    EXPECT_EQ(cell.count, 1);
    EXPECT_EQ(cell.forced_up, 1);
    EXPECT_EQ(cell.up_free, 0);
    EXPECT_EQ(cell.down, 0);
}

TEST(EnumerateExact, StartAtOneTwoSteps) {
    const auto e = enumerate_exact(WalkKind::reflected, 2, 1);
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e.at(Cell{1, 1}).forced_up, 1);
    EXPECT_EQ(e.at(Cell{1, 1}).down, 1);
    EXPECT_EQ(e.at(Cell{1, 0}).count, 1);
    EXPECT_EQ(e.at(Cell{3, 0}).up_free, 2);
}

TEST(EnumerateExact, Rejects) {
    EXPECT_THROW(enumerate_exact(WalkKind::simple, kEnumerationMaxT + 1, 0), std::invalid_argument);
    EXPECT_THROW(enumerate_exact(WalkKind::simple, 0, 0), std::invalid_argument);
    EXPECT_THROW(enumerate_exact(WalkKind::reflected, 4, -1), std::invalid_argument);
    EXPECT_NO_THROW(enumerate_exact(WalkKind::simple, 4, -1));
}

TEST(EnumerateExact, AgreesWithRecursiveCount) {
    for (int T = 1; T <= 12; ++T) {
        for (int s = 0; s <= 4; ++s) {
            for (const bool reflected : {true, false}) {
                const auto kind = reflected ? WalkKind::reflected : WalkKind::simple;
                const auto e = enumerate_exact(kind, T, s);
                const auto brute = testing::brute_force_counts(reflected, T, s);
                ASSERT_EQ(e.size(), brute.size());
                for (const auto& [rl, n] : brute) {
                    ASSERT_EQ(e.at(Cell{rl.first, rl.second}).count, n);
                }
            }
        }
    }
}

TEST(EnumerateExact, IndependentOfThreadCount) {
    for (const auto kind : {WalkKind::reflected, WalkKind::simple}) {
        const auto one = enumerate_exact(kind, 18, 2, 1);
        for (const int threads : {2, 3, 8}) {
            const auto many = enumerate_exact(kind, 18, 2, threads);
            ASSERT_EQ(one.size(), many.size());
            for (const auto& [c, e] : one) {
                const auto& m = many.at(c);
                ASSERT_EQ(e.count, m.count);
                ASSERT_EQ(e.up_free, m.up_free);
                ASSERT_EQ(e.down, m.down);
                ASSERT_EQ(e.forced_up, m.forced_up);
            }
        }
    }
}

TEST(DpJoint, TwoSteps) {
    const auto pmf = dp_joint(WalkKind::reflected, WalkParams{2, 0, Probability::exact(2, 5)});
    ASSERT_EQ(pmf.size(), 2u);
    EXPECT_EQ(*pmf.find(2, 0)->exact, Rational(2, 5));
    EXPECT_EQ(*pmf.find(0, 1)->exact, Rational(3, 5));
}

TEST(DpJoint, ExactlyEqualsClosedForm) {
    for (int T = 1; T <= 14; ++T) {
        for (int s = -3; s <= 5; ++s) {
            const WalkParams p{T, s, Probability::exact(2, 5)};
            for (const auto kind : {WalkKind::reflected, WalkKind::simple}) {
                if (kind == WalkKind::reflected && s < 0) {
                    continue;
                }
                const auto dp = dp_joint(kind, p);
                const auto closed = joint_pmf(kind, p);
                ASSERT_EQ(dp.size(), closed.size());
                for (const auto& [c, e] : closed.entries()) {
                    const auto* d = dp.find(c.r, c.l);
                    ASSERT_NE(d, nullptr);
                    ASSERT_EQ(*d->exact, *e.exact);
                    ASSERT_EQ(d->count, e.count);
                }
            }
        }
    }
}

TEST(DpJoint, LongHorizons) {
    for (const int T : {80, 160}) {
        const WalkParams p{T, 5, Probability::approx(0.45)};
        for (const auto kind : {WalkKind::reflected, WalkKind::simple}) {
            const auto dp = dp_joint(kind, p, false);
            const auto closed = joint_pmf(kind, p);
            EXPECT_FALSE(dp.has_counts());
            ASSERT_EQ(dp.size(), closed.size());
            for (const auto& [c, e] : closed.entries()) {
                ASSERT_NEAR(dp.probability(c.r, c.l), e.probability, 1e-12);
            }
        }
    }
}

TEST(Simulate, CountsAddUp) {
    const auto sim = simulate(WalkKind::reflected, WalkParams{20, 1, Probability::approx(0.4)}, 5000, 7);
    std::uint64_t total = 0;
    for (const auto& [c, n] : sim.joint_counts) {
        total += n;
        EXPECT_TRUE(rsrw_feasible(20, 1, c.r, c.l));
    }
    EXPECT_EQ(total, 5000u);
}

TEST(Simulate, DeterministicAcrossThreads) {
    const WalkParams p{30, 2, Probability::approx(0.45)};
    const std::uint64_t n = 3 * kSimulationChunk + 17;
    const auto one = simulate(WalkKind::simple, p, n, 99, 1);
    EXPECT_EQ(one.joint_counts, simulate(WalkKind::simple, p, n, 99, 1).joint_counts);
    EXPECT_EQ(one.joint_counts, simulate(WalkKind::simple, p, n, 99, 4).joint_counts);
    EXPECT_NE(one.joint_counts, simulate(WalkKind::simple, p, n, 100, 1).joint_counts);
}

TEST(Simulate, FairCoinReturnFrequency) {
    const std::uint64_t n = 100000;
    const auto sim = simulate(WalkKind::simple, WalkParams{2, 0, Probability::approx(0.5)}, n, 3);
    const double freq = static_cast<double>(sim.joint_counts.at(Cell{0, 1})) / static_cast<double>(n);
    EXPECT_NEAR(freq, 0.5, 0.01);
}

TEST(Simulate, AgreesWithExactLaw) {
    const WalkParams p{40, 3, Probability::approx(0.4)};
    const auto sim = simulate(WalkKind::reflected, p, 200000, 11, 2);
    const auto cells = compare_with_exact(sim, rsrw_joint_pmf(p));
    std::size_t eligible = 0;
    EXPECT_GE(fraction_within(cells, 25.0, 4.0, &eligible), 0.99);
    EXPECT_GT(eligible, 20u);
}

TEST(CompareWithExact, FlagsImpossibleCells) {
    const WalkParams p{2, 0, Probability::approx(0.5)};
    SimulationResult sim{WalkKind::reflected, p, 10, 0, {{Cell{2, 0}, 5}, {Cell{0, 1}, 4}, {Cell{1, 1}, 1}}};
    const auto cells = compare_with_exact(sim, rsrw_joint_pmf(p));
    ASSERT_EQ(cells.size(), 3u);
    bool seen = false;
    for (const auto& c : cells) {
        if (c.cell == Cell{1, 1}) {
            seen = true;
            EXPECT_EQ(c.probability, 0.0);
            EXPECT_TRUE(std::isinf(c.z));
        }
    }
    EXPECT_TRUE(seen);
}

} // namespace
} // namespace walklt
