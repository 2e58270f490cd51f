#include <gtest/gtest.h>

#include <cmath>

#include "lwedcp/sampling.hpp"
#include "lwedcp/serialize.hpp"

using namespace lwedcp;

TEST(TailBound, FrozenValues) {
    EXPECT_NEAR(gaussian_tail_bound(2.0, 1), 0.4462603203, 1e-9);
    EXPECT_NEAR(gaussian_tail_bound(1.000001, 5), 1.0, 1e-4);
    // the bound at the large-n regime of the reference table: d = 1 + eps/2
    double d = 1.0 + epsilon_lo(192) / 2.0;
    double b = gaussian_tail_bound(d, 1456);
    EXPECT_NEAR(b, 0.9975323696, 1e-8);
    EXPECT_LT(b, 1.0);
    EXPECT_GT(b, 0.9);
    EXPECT_THROW(gaussian_tail_bound(1.0, 3), std::invalid_argument);
    EXPECT_THROW(gaussian_tail_bound(0.5, 3), std::invalid_argument);
}

TEST(DiscreteGaussian, EdgeCases) {
    Rng rng(1);
    EXPECT_TRUE(sample_discrete_gaussian(0, 3.0, rng).empty());
    EXPECT_THROW(sample_discrete_gaussian(5, 0.0, rng), std::invalid_argument);
    // mass concentrates at 0 as the parameter shrinks
    auto tiny = sample_discrete_gaussian(2000, 0.1, rng);
    for (long x : tiny) EXPECT_EQ(x, 0);
}

TEST(DiscreteGaussian, Deterministic) {
    Rng a(99), b(99);
    EXPECT_EQ(sample_discrete_gaussian(100, 10.0, a), sample_discrete_gaussian(100, 10.0, b));
}

TEST(DiscreteGaussian, MomentsMatchConvention) {
    // density prop. to exp(-pi x^2/s^2) has standard deviation s/sqrt(2 pi)
    Rng rng(42);
    auto xs = sample_discrete_gaussian(100000, 10.0, rng);
    double mean = 0, sq = 0;
    for (long x : xs) {
        mean += x;
        sq += static_cast<double>(x) * x;
    }
    mean /= xs.size();
    sq /= xs.size();
    EXPECT_LE(std::abs(mean), 0.1);
    const double sd_expected = 10.0 / std::sqrt(2.0 * M_PI);
    EXPECT_NEAR(std::sqrt(sq - mean * mean), sd_expected, 0.05 * sd_expected);
}

TEST(DiscreteGaussian, EmpiricalTailUnderBound) {
    // quick mirror of the acceptance tail check
    for (double s : {5.0, 10.0, 20.0}) {
        Rng rng(7);
        auto xs = sample_discrete_gaussian(20000, s, rng);
        for (double d : {1.2, 1.5, 2.0}) {
            double threshold = d * s / std::sqrt(2.0 * M_PI);
            long count = 0;
            for (long x : xs)
                if (std::abs(static_cast<double>(x)) >= threshold) ++count;
            double freq = static_cast<double>(count) / xs.size();
            EXPECT_LE(freq, gaussian_tail_bound(d, 1)) << "s=" << s << " d=" << d;
        }
    }
}

TEST(ErrorNormBound, FormulaAndScaling) {
    ReductionParams p = derive_params(192);
    EXPECT_NEAR(error_norm_bound(p), 211.2062937, 1e-6);

    // bound / (1 + eps/2) == n / sqrt(2 pi) when m == n (sigma = sqrt(n))
    ReductionParams pn = derive_params(7, {{"m", "7"}});
    double stripped = error_norm_bound(pn) / (1.0 + pn.epsilon / 2.0);
    EXPECT_NEAR(stripped, 7.0 / std::sqrt(2.0 * M_PI), 1e-12);

    // linear in (1 + eps/2)
    ReductionParams lo = derive_params(7);
    ReductionParams hi = derive_params(7, {{"epsilon", "0.9"}});
    double ratio = error_norm_bound(hi) / error_norm_bound(lo);
    EXPECT_NEAR(ratio, (1.0 + 0.45) / (1.0 + lo.epsilon / 2.0), 1e-12);
}

TEST(GenInstance, IdentityAndBound) {
    ReductionParams p = derive_params(2, {{"q", "13"}, {"m", "4"}});
    LweInstance inst = gen_lwe_instance(p, 1);
    EXPECT_TRUE(inst.check_identity());
    EXPECT_LE(inst.e_norm(), error_norm_bound(p));
    EXPECT_TRUE(has_full_column_rank_mod_q(inst.A, inst.q));
    for (int i = 0; i < inst.m; ++i) {
        EXPECT_GE(inst.v[i], 0);
        EXPECT_LT(inst.v[i], inst.q);
    }
}

TEST(GenInstance, ZeroErrorDegenerateCase) {
    // sigma so small the error vector is deterministically zero: v = A s mod q
    ReductionParams p = derive_params(2, {{"q", "13"}, {"m", "4"}, {"sigma", "1e-3"}});
    LweInstance inst = gen_lwe_instance(p, 5);
    for (const Int& e : inst.e) EXPECT_EQ(e, 0);
    for (int i = 0; i < inst.m; ++i)
        EXPECT_EQ(inst.v[i], mod_pos(dot(inst.A[i], inst.s), inst.q));
}

TEST(GenInstance, ReproducibleByteForByte) {
    ReductionParams p = derive_params(2, {{"q", "97"}, {"m", "5"}, {"M", "16"}});
    std::string a = to_json(gen_lwe_instance(p, 12345));
    std::string b = to_json(gen_lwe_instance(p, 12345));
    std::string c = to_json(gen_lwe_instance(p, 12346));
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(GenInstance, RequiresPrimeModulus) {
    ReductionParams p = derive_params(4);  // default q = 1024, composite
    EXPECT_THROW(gen_lwe_instance(p, 1), std::invalid_argument);
}

TEST(InstanceJson, RoundTrip) {
    ReductionParams p = derive_params(2, {{"q", "97"}, {"m", "5"}, {"M", "16"}});
    LweInstance inst = gen_lwe_instance(p, 77);
    LweInstance back = instance_from_json(to_json(inst));
    EXPECT_EQ(back.A, inst.A);
    EXPECT_EQ(back.s, inst.s);
    EXPECT_EQ(back.e, inst.e);
    EXPECT_EQ(back.v, inst.v);
    EXPECT_EQ(back.seed, inst.seed);
    EXPECT_EQ(to_json(back), to_json(inst));
}
