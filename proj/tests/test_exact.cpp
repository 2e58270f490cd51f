#include <gtest/gtest.h>

#include <gmpxx.h>

#include "lwedcp/exact.hpp"
#include "lwedcp/rng.hpp"

using namespace lwedcp;

TEST(BigintHelpers, RationalFloorsAndRounding) {
    EXPECT_EQ(floor_rat(make_rat(7, 2)), 3);
    EXPECT_EQ(floor_rat(make_rat(-7, 2)), -4);
    EXPECT_EQ(ceil_rat(make_rat(7, 2)), 4);
    EXPECT_EQ(ceil_rat(make_rat(-7, 2)), -3);
    // ties round toward +infinity
    EXPECT_EQ(round_rat(make_rat(5, 2)), 3);
    EXPECT_EQ(round_rat(make_rat(-5, 2)), -2);
    EXPECT_EQ(round_rat(make_rat(7, 3)), 2);
    EXPECT_EQ(round_rat(make_rat(-7, 3)), -2);
}

TEST(BigintHelpers, ModForms) {
    EXPECT_EQ(mod_pos(Int(-1), Int(5)), 4);
    EXPECT_EQ(mod_pos(Int(12), Int(5)), 2);
    EXPECT_EQ(mod_balanced(Int(3), Int(5)), -2);
    EXPECT_EQ(mod_balanced(Int(2), Int(5)), 2);
    EXPECT_EQ(mod_balanced(Int(5), Int(10)), 5);  // boundary stays +R/2
}

TEST(ExactSqrt, IntegerSqrtFloor) {
    EXPECT_EQ(isqrt_floor(Int(0)), 0);
    EXPECT_EQ(isqrt_floor(Int(15)), 3);
    EXPECT_EQ(isqrt_floor(Int(16)), 4);
    Int big = pow_int(Int(10), 40) + 12345;
    Int r = isqrt_floor(big);
    EXPECT_LE(r * r, big);
    EXPECT_GT((r + 1) * (r + 1), big);
    EXPECT_THROW(isqrt_floor(Int(-1)), std::invalid_argument);
}

TEST(ExactSqrt, Comparisons) {
    EXPECT_EQ(cmp_sqrt(Rat(4), Rat(2)), 0);
    EXPECT_EQ(cmp_sqrt(Rat(2), make_rat(141421356, 100000000)), 1);
    EXPECT_EQ(cmp_sqrt(Rat(2), make_rat(141421357, 100000000)), -1);
    EXPECT_EQ(cmp_sqrt(Rat(2), Rat(-3)), 1);
    EXPECT_EQ(cmp_sqrt(Rat(0), Rat(0)), 0);

    EXPECT_EQ(cmp_signed_sqrt(-1, Rat(2), Rat(-1)), -1);  // -1.414 < -1
    EXPECT_EQ(cmp_signed_sqrt(-1, Rat(2), Rat(-2)), 1);   // -1.414 > -2
    EXPECT_EQ(cmp_signed_sqrt(0, Rat(2), Rat(0)), 0);
    EXPECT_EQ(cmp_signed_sqrt(1, Rat(9), Rat(3)), 0);
}

TEST(ExactSqrt, FloorOfShiftedRoots) {
    // rational radicands evaluate exactly
    EXPECT_EQ(floor_sqrt_sub(1, make_rat(25, 4), make_rat(1, 4)), 2);  // 2.5 - 0.25
    EXPECT_EQ(floor_sqrt_sub(1, make_rat(9, 4), make_rat(1, 2)), 1);   // exact boundary 1.5 - 0.5
    EXPECT_EQ(floor_sqrt_sub(1, Rat(2), Rat(0)), 1);
    EXPECT_EQ(floor_sqrt_sub(-1, Rat(2), Rat(0)), -2);
    EXPECT_EQ(floor_sqrt_sub(0, Rat(7), make_rat(3, 2)), -2);  // floor(-1.5)
    EXPECT_EQ(floor_sqrt_sub(1, Rat(0), make_rat(-3, 2)), 1);  // floor(1.5)
}

// cross-check against 512-bit floating point on random inputs, skipping
// values that land indistinguishably close to an integer
TEST(ExactSqrt, MatchesHighPrecisionReference) {
    Rng rng(123);
    int checked = 0;
    while (checked < 2000) {
        Int num(static_cast<unsigned long>(rng.below(std::uint64_t(1) << 40)));
        Int den(static_cast<unsigned long>(rng.below(std::uint64_t(999)) + 1));
        int s = rng.coin() ? 1 : -1;
        Rat r = make_rat(num, den);
        Rat w = make_rat(Int(static_cast<unsigned long>(rng.bits53())), Int(1) << 53);
        if (rng.coin()) w = -w;

        mpf_class rf(0, 512), wf(0, 512), val(0, 512);
        mpf_set_q(rf.get_mpf_t(), r.get_mpq_t());
        mpf_set_q(wf.get_mpf_t(), w.get_mpq_t());
        mpf_sqrt(val.get_mpf_t(), rf.get_mpf_t());
        if (s < 0) val = -val;
        val -= wf;
        mpf_class fl(0, 512);
        mpf_floor(fl.get_mpf_t(), val.get_mpf_t());
        if (val - fl < 1e-30 || (fl + 1) - val < 1e-30) continue;  // too close to call

        Int expected(fl);
        EXPECT_EQ(floor_sqrt_sub(s, r, w), expected)
            << "r=" << r << " w=" << w << " s=" << s;
        ++checked;
    }
}

TEST(ExactSqrt, SqrtValRepresentation) {
    SqrtVal v = SqrtVal::from_rational(make_rat(3, 2));
    EXPECT_EQ(v.sq, make_rat(9, 4));
    EXPECT_NEAR(v.approx(), 1.5, 1e-15);
    EXPECT_THROW(SqrtVal::from_square(Rat(-1)), std::invalid_argument);
}

TEST(RngBasics, DeterministicAndBounded) {
    Rng a(42), b(42), c(43);
    EXPECT_EQ(a.u64(), b.u64());
    EXPECT_NE(Rng(42).u64(), c.u64());

    Rng r(7);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t x = r.below(std::uint64_t(17));
        EXPECT_LT(x, 17u);
    }
    Int bound = pow_int(Int(2), 100) + 987654321;
    for (int i = 0; i < 200; ++i) {
        Int x = r.below(bound);
        EXPECT_GE(x, 0);
        EXPECT_LT(x, bound);
    }
    EXPECT_EQ(r.below(Int(1)), 0);

    // label derivation separates streams
    EXPECT_NE(derive_seed(1, "gen"), derive_seed(1, "two-point"));
    EXPECT_NE(derive_seed(1, "gen"), derive_seed(2, "gen"));
    EXPECT_EQ(derive_seed(5, "x"), derive_seed(5, "x"));
}
