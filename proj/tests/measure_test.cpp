#include <gtest/gtest.h>

#include <cmath>

#include "detconc/measure.hpp"
#include "detconc/oracle.hpp"
#include "test_support.hpp"

namespace detconc {
namespace {

using testing::Rng;

TEST(DPair, Examples) {
    EXPECT_EQ(d_pair(QubitPair(0.5)), 1.0);
    EXPECT_EQ(d_pair(QubitPair(1.0)), 0.0);
    EXPECT_NEAR(d_pair(QubitPair(std::exp2(-0.7))), 0.7, 1e-15);
}

TEST(DGeneral, Examples) {
    EXPECT_NEAR(d_general(Spectrum::canonicalize({1.0 / 3, 1.0 / 3, 1.0 / 3})), std::log2(3.0), 1e-12);
    EXPECT_EQ(d_general(Spectrum::canonicalize({1.0, 0.0, 0.0})), 0.0);
    // 40-digit reference; equals d_pair(0.6) + d_pair(0.7).
    EXPECT_NEAR(d_general(Spectrum::canonicalize({0.42, 0.28, 0.18, 0.12})), 1.251538766995964, 1e-14);
}

TEST(KMax, Examples) {
    EXPECT_EQ(k_max(Ensemble::from_values({0.5, 0.5})), 2);
    EXPECT_EQ(k_max(Ensemble::from_values({std::exp2(-0.7), std::exp2(-0.6)})), 1);
    const auto e = Ensemble::from_values({0.6, 0.7, 0.8});
    EXPECT_EQ(k_max(e), 1);
    EXPECT_EQ(k_max(e), oracle::k_max_oracle(e));
}

TEST(KMax, InclusiveAtPowersOfTwo) {
    // 2^-0.5 squared rounds to 0.5000000000000001; flooring the log would give 0.
    const double r = std::sqrt(0.5);
    const auto e = Ensemble::from_values({r, r});
    EXPECT_LT(-std::log2(r * r), 1.0);
    EXPECT_EQ(k_max(e), 1);
    EXPECT_EQ(k_max(Ensemble::from_values({0.625, 0.8})), 1);  // product exactly 1/2
    EXPECT_EQ(k_max(Ensemble::from_values({1.0})), 0);
    EXPECT_EQ(k_max(Ensemble::from_values({0.5})), 1);
}

TEST(KMax, LargeEnsembleStaysFinite) {
    std::vector<double> a(2500, 0.5);
    a.push_back(0.75);
    EXPECT_EQ(k_max(Ensemble::from_values(a)), 2500);
}

TEST(KMaxGeneral, Examples) {
    EXPECT_EQ(k_max_general(Spectrum::canonicalize({1.0 / 3, 1.0 / 3, 1.0 / 3})), 1);
    EXPECT_EQ(k_max_general(Spectrum::canonicalize({0.5, 0.5})), 1);
    EXPECT_EQ(k_max_general(Spectrum::canonicalize({0.6, 0.4})), 0);
    EXPECT_EQ(k_max_general(Spectrum::canonicalize({0.25, 0.25, 0.25, 0.25})), 2);
}

TEST(MeasureProperties, AdditivityAndConsistency) {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = testing::random_spectrum(rng, 1, 6);
        const auto y = testing::random_spectrum(rng, 1, 6);
        EXPECT_NEAR(d_general(tensor(x, y)), d_general(x) + d_general(y), 1e-9);

        const QubitPair p(testing::random_pair_values(rng, 1).front());
        EXPECT_EQ(d_general(pair_spectrum(p)), d_pair(p));
    }
}

TEST(MeasureProperties, KMaxIsFloorOfSummedD) {
    Rng rng(47);
    int compared = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const auto e = testing::random_ensemble(rng, 1, 40);
        double sum = 0.0;
        for (const auto& p : e.pairs()) sum += d_pair(p);
        if (std::abs(sum - std::round(sum)) < 1e-9) continue;  // boundary handled separately
        EXPECT_EQ(k_max(e), static_cast<int>(std::floor(sum)));
        ++compared;
    }
    EXPECT_GT(compared, 1900);
}

TEST(MeasureProperties, DIsRenyiAtInfinityAndBelowEntropy) {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = testing::random_spectrum(rng, 1, 8);
        EXPECT_NEAR(renyi(s, 1e4), d_general(s), 1e-3);
        EXPECT_LE(d_general(s), entropy(s) + 1e-12);
        EXPECT_GE(d_general(s), 0.0);
        EXPECT_EQ(d_general(s) == 0.0, s.max() == 1.0);
    }
}

TEST(MeasureProperties, InvariantUnderReordering) {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto raw = testing::random_probabilities(rng, 5);
        const double before = d_general(Spectrum::canonicalize(raw));
        std::shuffle(raw.begin(), raw.end(), rng);
        EXPECT_EQ(d_general(Spectrum::canonicalize(raw)), before);
    }
}

}  // namespace
}  // namespace detconc
