#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "detconc/spectra.hpp"
#include "test_support.hpp"

namespace detconc {
namespace {

using testing::Rng;

void expect_spectrum(const Spectrum& s, const std::vector<double>& expected, double tol = 1e-15) {
    ASSERT_EQ(s.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_NEAR(s[i], expected[i], tol) << "entry " << i;
    }
}

TEST(Canonicalize, SortsDescending) {
    expect_spectrum(Spectrum::canonicalize({0.3, 0.7}), {0.7, 0.3});
    expect_spectrum(Spectrum::canonicalize({1.0}), {1.0});
    expect_spectrum(Spectrum::canonicalize({0.05, 0.95}), {0.95, 0.05});
}

TEST(Canonicalize, ClampsTinyNegativeAndNearOne) {
    const auto s = Spectrum::canonicalize({-1e-12, 1.0 + 1e-12});
    EXPECT_EQ(s[0], 1.0);
    EXPECT_EQ(s[1], 0.0);
    EXPECT_FALSE(std::signbit(s[1]));
}

TEST(Canonicalize, RejectsInvalidInput) {
    EXPECT_THROW(Spectrum::canonicalize({}), InvariantError);
    EXPECT_THROW(Spectrum::canonicalize({-0.1, 1.1}), InvariantError);
    EXPECT_THROW(Spectrum::canonicalize({0.3, 0.3}), InvariantError);
    EXPECT_THROW(Spectrum::canonicalize({std::numeric_limits<double>::quiet_NaN(), 1.0}), InvariantError);
}

TEST(Canonicalize, RenormalizesOnRequest) {
    expect_spectrum(Spectrum::canonicalize({1.0, 3.0}, {.renormalize = true}), {0.75, 0.25});
    EXPECT_THROW(Spectrum::canonicalize({0.0, 0.0}, {.renormalize = true}), InvariantError);
}

TEST(Canonicalize, EpsIsConfigurable) {
    EXPECT_THROW(Spectrum::canonicalize({0.5, 0.5001}), InvariantError);
    EXPECT_NO_THROW(Spectrum::canonicalize({0.5, 0.5001}, {.eps = 1e-3}));
}

TEST(QubitPairTest, RangeIsHalfToOne) {
    EXPECT_NO_THROW(QubitPair(0.5));
    EXPECT_NO_THROW(QubitPair(1.0));
    EXPECT_THROW(QubitPair(0.49), InvariantError);
    EXPECT_THROW(QubitPair(1.01), InvariantError);
    EXPECT_EQ(QubitPair(0.5 - 1e-12).a(), 0.5);
    EXPECT_TRUE(QubitPair(0.5).is_bell());
    EXPECT_TRUE(QubitPair(1.0).is_product());
}

TEST(EnsembleTest, RequiresAtLeastOnePair) {
    EXPECT_THROW(Ensemble(std::vector<QubitPair>{}), InvariantError);
    EXPECT_THROW(Ensemble::from_values({0.6, 0.2}), InvariantError);
    EXPECT_EQ(Ensemble::from_values({0.6, 0.7}).size(), 2u);
}

TEST(Tensor, ProductsResorted) {
    const auto s = tensor(Spectrum::canonicalize({0.6, 0.4}), Spectrum::canonicalize({0.7, 0.3}));
    expect_spectrum(s, {0.42, 0.28, 0.18, 0.12});
}

TEST(Tensor, ProductStateIsIdentity) {
    const auto s = Spectrum::canonicalize({0.5, 0.3, 0.2});
    const auto t = tensor(Spectrum::canonicalize({1.0, 0.0}), s);
    expect_spectrum(t, {0.5, 0.3, 0.2, 0.0, 0.0, 0.0});
}

TEST(Tensor, TwoBellsAndWeakPair) {
    const auto bell = Spectrum::canonicalize({0.5, 0.5});
    const auto s = tensor(tensor(bell, bell), Spectrum::canonicalize({0.95, 0.05}));
    expect_spectrum(s, {0.2375, 0.2375, 0.2375, 0.2375, 0.0125, 0.0125, 0.0125, 0.0125});
}

TEST(PairSpectrum, Examples) {
    expect_spectrum(pair_spectrum(QubitPair(0.5)), {0.5, 0.5});
    expect_spectrum(pair_spectrum(QubitPair(1.0)), {1.0, 0.0});
    expect_spectrum(pair_spectrum(QubitPair(0.9)), {0.9, 0.1});
}

TEST(Entropy, Examples) {
    EXPECT_DOUBLE_EQ(entropy(Spectrum::canonicalize({0.5, 0.5})), 1.0);
    EXPECT_EQ(entropy(Spectrum::canonicalize({1.0, 0.0})), 0.0);
    // Reference value from a 40-digit evaluation.
    EXPECT_NEAR(entropy(Spectrum::canonicalize({0.9, 0.1})), 0.4689955935892812, 1e-14);
}

TEST(Renyi, Examples) {
    const auto uniform = Spectrum::canonicalize({0.5, 0.5});
    for (double t : {0.0, 0.5, 2.0, 7.0, 1e4}) {
        EXPECT_NEAR(renyi(uniform, t), 1.0, 1e-12) << "t = " << t;
    }
    const auto s = Spectrum::canonicalize({0.9, 0.1});
    EXPECT_NEAR(renyi(s, 2.0), 0.2863041851566410, 1e-14);
    EXPECT_NEAR(renyi(s, 1e4), 0.152, 1e-3);
    EXPECT_NEAR(renyi(s, 1e4), -std::log2(0.9), 1e-3);
    EXPECT_NEAR(renyi(s, 0.0), 1.0, 0.0);
}

TEST(Renyi, RejectsOrderOneAndNegative) {
    const auto s = Spectrum::canonicalize({0.9, 0.1});
    EXPECT_THROW(renyi(s, 1.0), InvariantError);
    EXPECT_THROW(renyi(s, -0.5), InvariantError);
    EXPECT_THROW(renyi(s, std::numeric_limits<double>::quiet_NaN()), InvariantError);
}

TEST(Renyi, HugeOrderDoesNotUnderflow) {
    const auto s = Spectrum::canonicalize({0.2, 0.2, 0.2, 0.2, 0.2});
    EXPECT_NEAR(renyi(s, 1e6), std::log2(5.0), 1e-9);
}

TEST(ScaledProductTest, NoUnderflowForThousandsOfPairs) {
    ScaledProduct p;
    for (int i = 0; i < 3000; ++i) p *= 0.5;
    EXPECT_EQ(p.value(), 0.0);  // the plain double would underflow
    EXPECT_EQ(p.log2(), -3000.0);
    EXPECT_EQ(p.scaled(3000), 1.0);
    EXPECT_THROW(p *= 0.0, InvariantError);
}

TEST(ScaledProductTest, MatchesPlainProductWhenRepresentable) {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testing::random_pair_values(rng, 25);
        ScaledProduct p;
        double plain = 1.0;
        for (double v : a) {
            p *= v;
            plain *= v;
        }
        EXPECT_EQ(p.value(), plain);
    }
}

TEST(SpectraProperties, TensorAssociativeAndEntropyAdditive) {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = testing::random_spectrum(rng, 1, 5);
        const auto y = testing::random_spectrum(rng, 1, 5);
        const auto z = testing::random_spectrum(rng, 1, 4);
        EXPECT_TRUE(testing::same_spectrum(tensor(tensor(x, y), z), tensor(x, tensor(y, z)), 1e-12));
        EXPECT_NEAR(entropy(tensor(x, y)), entropy(x) + entropy(y), 1e-9);
        const auto xy = tensor(x, y);
        EXPECT_EQ(xy.size(), x.size() * y.size());
    }
}

TEST(SpectraProperties, RenyiMonotoneAndLimits) {
    Rng rng(7);
    const std::vector<double> grid{0.0, 0.1, 0.3, 0.5, 0.8, 0.95, 1.05, 1.2, 1.5, 2.0,
                                   3.0, 5.0, 8.0, 13.0, 20.0, 50.0, 100.0, 500.0, 2000.0, 1e4};
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = testing::random_spectrum(rng, 1, 8);
        double previous = std::numeric_limits<double>::infinity();
        for (double t : grid) {
            const double h = renyi(s, t);
            EXPECT_LE(h, previous + 1e-12) << "t = " << t;
            previous = h;
        }
        EXPECT_NEAR(renyi(s, 1.0 - 1e-6), entropy(s), 1e-4);
        EXPECT_NEAR(renyi(s, 1.0 + 1e-6), entropy(s), 1e-4);
        EXPECT_NEAR(renyi(s, 1e4), -std::log2(s.max()), 1e-3);
        EXPECT_GE(entropy(s), 0.0);
        EXPECT_LE(entropy(s), std::log2(static_cast<double>(s.size())) + 1e-12);
    }
}

}  // namespace
}  // namespace detconc
