#include "walklt/markov.hpp"

#include "walklt/distribution.hpp"

#include <gtest/gtest.h>

namespace walklt {
namespace {

double expected_local_time_from_law(int T, int s, double q) {
    const auto pmf = rsrw_joint_pmf(WalkParams{T, s, Probability::approx(q)});
    double sum = 0.0;
    for (const auto& [l, p] : local_time_marginal(pmf)) {
        sum += l * p;
    }
    return sum;
}

TEST(BuildTruncated, SmallestMatrix) {
    const auto Q = build_truncated(0.3, 1);
    EXPECT_EQ(Q.size(), 1);
    EXPECT_EQ(Q(0, 0), 0.0);
    EXPECT_EQ(Q(0, 1), 1.0);
    EXPECT_DOUBLE_EQ(Q(1, 0), 0.7);
    EXPECT_EQ(Q(1, 1), 0.0);
}

TEST(BuildTruncated, RowsAndBoundary) {
    const auto Q = build_truncated(0.45, 3);
    EXPECT_EQ(Q(2, 0), 0.0);
    EXPECT_DOUBLE_EQ(Q(2, 1), 0.55);
    EXPECT_EQ(Q(2, 2), 0.0);
    EXPECT_DOUBLE_EQ(Q(2, 3), 0.45);
    for (int i = 0; i < 3; ++i) {
        EXPECT_DOUBLE_EQ(Q.matrix().row(i).sum(), 1.0) << i;
    }
    EXPECT_DOUBLE_EQ(Q.matrix().row(3).sum(), 0.55);
}

TEST(BuildTruncated, Rejects) {
    EXPECT_THROW(build_truncated(0.0, 4), std::invalid_argument);
    EXPECT_THROW(build_truncated(1.0, 4), std::invalid_argument);
    EXPECT_THROW(build_truncated(0.5, 0), std::invalid_argument);
}

TEST(MatrixPower, MatchesDenseProduct) {
    const auto Q = build_truncated(0.37, 12);
    Eigen::MatrixXd dense = Eigen::MatrixXd::Identity(13, 13);
    for (int n = 0; n <= 9; ++n) {
        EXPECT_LT((matrix_power(Q, n) - dense).cwiseAbs().maxCoeff(), 1e-15) << n;
        dense = dense * Q.matrix();
    }
}

TEST(MarginalViaPower, Examples) {
    const double q = 0.45;
    const auto m = marginal_via_power(build_truncated(q, 4), 0, 2);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_DOUBLE_EQ(m.at(2), q);
    EXPECT_DOUBLE_EQ(m.at(0), 1 - q);

    const auto one = marginal_via_power(build_truncated(q, 2), 0, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.at(1), 1.0);
}

TEST(MarginalViaPower, RejectsShortTruncation) {
    const auto Q = build_truncated(0.45, 5);
    EXPECT_THROW(marginal_via_power(Q, 2, 3), std::invalid_argument);
    EXPECT_NO_THROW(marginal_via_power(Q, 2, 2));
}

TEST(MarginalViaPower, MatchesClosedForm) {
    for (const double q : {0.40, 0.45, 0.5, 0.55}) {
        for (const int T : {1, 7, 40, 120}) {
            for (const int s : {0, 1, 4}) {
                const auto Q = build_truncated(q, truncation_for(T, s));
                const auto power = marginal_via_power(Q, s, T);
                const auto closed = value_marginal(rsrw_joint_pmf(WalkParams{T, s, Probability::approx(q)}));
                ASSERT_EQ(power.size(), closed.size());
                for (const auto& [r, p] : closed) {
                    ASSERT_NEAR(power.at(r), p, 1e-10) << q << " " << T << " " << s << " " << r;
                }
            }
        }
    }
}

TEST(ExpectedLocalTime, Examples) {
    const double q = 0.3;
    // From 0: visits at time 2 with probability 1-q, plus the time-0 term.
    EXPECT_NEAR(expected_local_time(build_truncated(q, 3), 0, 2), 1 + (1 - q), 1e-14);
    EXPECT_NEAR(expected_local_time(build_truncated(q, 4), 2, 1), 0.0, 1e-14);
}

TEST(ExpectedLocalTime, MatchesLaw) {
    for (const double q : {0.40, 0.45, 0.5, 0.55}) {
        for (const int T : {1, 2, 20, 80, 150}) {
            for (const int s : {0, 3, 10}) {
                const auto Q = build_truncated(q, truncation_for(T, s));
                const double offset = s == 0 ? 1.0 : 0.0;
                EXPECT_NEAR(expected_local_time(Q, s, T) - offset, expected_local_time_from_law(T, s, q), 1e-9)
                    << q << " " << T << " " << s;
            }
        }
    }
}

TEST(ExpectedLocalTime, AllStartsAtOnce) {
    const int T = 60;
    const auto Q = build_truncated(0.42, T + 9);
    const auto all = expected_local_times(Q, T);
    ASSERT_EQ(all.size(), 9u);
    for (int s = 0; s < 9; ++s) {
        EXPECT_NEAR(all[s], expected_local_time(Q, s, T), 1e-12);
    }
}

TEST(ExpectedLocalTime, AgreesWithPartialSum) {
    for (const double q : {0.40, 0.5, 0.55}) {
        const int T = 100;
        for (const int s : {0, 2, 7}) {
            const auto Q = build_truncated(q, truncation_for(T, s));
            EXPECT_NEAR(expected_local_time(Q, s, T), local_time_partial_sum(Q, s, T), 1e-10);
        }
    }
}

TEST(ExpectedLocalTime, InsensitiveToTruncation) {
    const int T = 50;
    const int s = 4;
    const double tight = expected_local_time(build_truncated(0.45, truncation_for(T, s)), s, T);
    const double loose = expected_local_time(build_truncated(0.45, truncation_for(T, s) + 9), s, T);
    EXPECT_NEAR(tight, loose, 1e-12);
}

} // namespace
} // namespace walklt
