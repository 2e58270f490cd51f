#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "lwedcp/dcpsolve.hpp"
#include "lwedcp/lattice.hpp"
#include "lwedcp/rng.hpp"
#include "lwedcp/verify.hpp"

using namespace lwedcp;

namespace {

Basis make_basis(std::initializer_list<std::initializer_list<long>> cols) {
    Basis b;
    for (const auto& c : cols) {
        IntVec col;
        for (long x : c) col.emplace_back(x);
        b.cols.push_back(col);
    }
    return b;
}

IntMat random_matrix(int m, int n, const Int& q, Rng& rng) {
    IntMat A(m, IntVec(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = rng.below(q);
    return A;
}

bool in_lattice(const Basis& b, const IntVec& y) {
    try {
        integral_coefficients(b, y);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

// multiset of columns up to sign, for reduced-basis comparisons
std::multiset<IntVec> abs_columns(const Basis& b) {
    std::multiset<IntVec> out;
    for (IntVec c : b.cols) {
        IntVec neg(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
        out.insert(std::min(c, neg));
    }
    return out;
}

}  // namespace

TEST(QaryBasis, TwoDimExample) {
    IntMat A = {{1}, {2}};  // column (1,2), m=2, n=1
    Basis b = qary_basis(A, Int(5));
    ASSERT_EQ(b.rank(), 2u);
    EXPECT_EQ(b.cols[0], (IntVec{1, 2}));
    EXPECT_EQ(b.cols[1], (IntVec{0, 5}));

    // brute-force membership against the definition
    for (long y0 = 0; y0 < 5; ++y0)
        for (long y1 = 0; y1 < 5; ++y1) {
            bool defined = false;
            for (long s = 0; s < 5; ++s)
                if (y0 % 5 == s % 5 && y1 % 5 == (2 * s) % 5) defined = true;
            EXPECT_EQ(in_lattice(b, IntVec{Int(y0), Int(y1)}), defined) << y0 << "," << y1;
        }
}

TEST(QaryBasis, ZeroMatrixGivesQIdentity) {
    IntMat A = {{0}, {0}, {0}};
    Basis b = qary_basis(A, Int(5));
    ASSERT_EQ(b.rank(), 3u);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(b.cols[j][i], i == j ? 5 : 0);
}

TEST(QaryBasis, ColumnsAreLatticeMembers) {
    Rng rng(3);
    Int q(13);
    IntMat A = random_matrix(4, 2, q, rng);
    Basis b = qary_basis(A, q);
    // each basis column must be A s mod q for some s: the mod-q system is solvable
    for (const IntVec& col : b.cols) {
        IntVec residue(col.size());
        for (std::size_t i = 0; i < col.size(); ++i) residue[i] = mod_pos(col[i], q);
        EXPECT_NO_THROW(solve_mod_q(A, residue, q));
    }
}

TEST(QaryBasis, MutualMembershipWithGenerators) {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        int m = 2 + static_cast<int>(rng.below(std::uint64_t(5)));  // 2..6
        int n = 1 + static_cast<int>(rng.below(std::uint64_t(2)));
        Int q(trial % 2 ? 13 : 31);
        IntMat A = random_matrix(m, n, q, rng);
        Basis b = qary_basis(A, q);

        // generators of [A | qI] all lie in L(b)
        for (int j = 0; j < n; ++j) {
            IntVec col(m);
            for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(i)] = A[i][j];
            EXPECT_TRUE(in_lattice(b, col));
        }
        for (int i = 0; i < m; ++i) {
            IntVec col(m, Int(0));
            col[static_cast<std::size_t>(i)] = q;
            EXPECT_TRUE(in_lattice(b, col));
        }
        // determinant equals q^(m - rank_q(A))
        if (has_full_column_rank_mod_q(A, q))
            EXPECT_EQ(abs(determinant(b)), pow_int(q, static_cast<unsigned long>(m - n)));
    }
}

TEST(Lll, OrthogonalFixedPointUpToSignAndOrder) {
    Basis b = make_basis({{3, 0}, {0, 2}});
    Basis r = lll_reduce(b);
    EXPECT_EQ(abs_columns(r), abs_columns(b));
}

TEST(Lll, ReducesSkewedBasis) {
    Basis b = make_basis({{1, 0}, {1000000, 1}});
    Basis r = lll_reduce(b);
    EXPECT_EQ(abs(determinant(r)), abs(determinant(b)));
    for (const IntVec& c : r.cols) EXPECT_LE(norm_sq(c), 2);
}

TEST(Lll, PreservesDeterminantAndSatisfiesConditions) {
    Rng rng(8);
    Int q(31);
    IntMat A = random_matrix(5, 2, q, rng);
    Basis b = qary_basis(A, q);
    Basis r = lll_reduce(b);
    EXPECT_EQ(abs(determinant(r)), abs(determinant(b)));

    // recompute Gram-Schmidt data and verify size reduction + Lovasz
    auto gram = gram_matrix(r);
    std::size_t rank = r.rank();
    std::vector<RatVec> mu(rank, RatVec(rank, Rat(0)));
    RatVec d(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat acc = gram[i][j];
            for (std::size_t k = 0; k < j; ++k) acc -= mu[i][k] * mu[j][k] * d[k];
            mu[i][j] = acc / d[j];
            EXPECT_LE(abs(mu[i][j]), make_rat(1, 2)) << i << "," << j;
        }
        Rat di = gram[i][i];
        for (std::size_t j = 0; j < i; ++j) di -= mu[i][j] * mu[i][j] * d[j];
        d[i] = di;
    }
    for (std::size_t k = 1; k < rank; ++k)
        EXPECT_GE(d[k], (make_rat(99, 100) - mu[k][k - 1] * mu[k][k - 1]) * d[k - 1]);
}

TEST(Lll, FirstVectorWithinProvenFactorOfLambda1) {
    Rng rng(21);
    Int q(61);
    IntMat A = random_matrix(6, 2, q, rng);
    Basis r = lll_reduce(qary_basis(A, q));
    SvpResult svp = lambda1_bruteforce(r);
    // |b_1|^2 <= 2^(rank-1) lambda_1^2
    EXPECT_LE(norm_sq(r.cols[0]), pow_int(Int(2), 5) * svp.norm_sq);
}

TEST(Babai, LatticePointIsFixed) {
    Rng rng(4);
    Int q(13);
    Basis r = lll_reduce(qary_basis(random_matrix(4, 2, q, rng), q));
    IntVec point(r.dim(), Int(0));
    for (std::size_t j = 0; j < r.rank(); ++j)
        for (std::size_t i = 0; i < r.dim(); ++i) point[i] += Int(1 + (j % 3)) * r.cols[j][i];
    RatVec y(point.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = Rat(point[i]);
    EXPECT_EQ(babai_nearest(r, y), point);
}

TEST(Babai, SmallPerturbationRecovered) {
    Basis r = lll_reduce(make_basis({{7, 0, 0}, {0, 5, 0}, {0, 0, 9}}));
    IntVec point{Int(7), Int(10), Int(-9)};
    RatVec y(3);
    for (int i = 0; i < 3; ++i) y[static_cast<std::size_t>(i)] = Rat(point[static_cast<std::size_t>(i)]) + make_rat(1, 3);
    EXPECT_EQ(babai_nearest(r, y), point);
}

TEST(Babai, WithinExponentialFactorOfTrueDistance) {
    Rng rng(9);
    Int q(31);
    for (int trial = 0; trial < 5; ++trial) {
        Basis r = lll_reduce(qary_basis(random_matrix(4, 2, q, rng), q));
        RatVec y(4);
        for (auto& c : y) c = make_rat(Int(static_cast<long>(rng.below(std::uint64_t(300)))), Int(7));
        IntVec c_babai = babai_nearest(r, y);
        IntVec c_best = cvp_bruteforce(r, y);
        RatVec d1(4), d2(4);
        for (std::size_t i = 0; i < 4; ++i) {
            d1[i] = y[i] - Rat(c_babai[i]);
            d2[i] = y[i] - Rat(c_best[i]);
        }
        // ratio bounded by 2^rank (squared: 4^rank), and the oracle is never worse
        EXPECT_LE(norm_sq(d2), norm_sq(d1));
        EXPECT_LE(norm_sq(d1), pow_int(Int(4), 4) * norm_sq(d2));
    }
}

TEST(SelectEta, ExactWindowExamples) {
    // d equal to |e|: the first grid point already sits in the window
    EtaSelection sel = select_eta_verification(Rat(1369), 8, Rat(1369));
    EXPECT_EQ(sel.i0, 0);
    EXPECT_EQ(sel.eta.sq, Rat(1369));

    // d = |e| (1+1/n)^3: exact cancellation at i = 3 (the i = 2 point lands
    // exactly on the open upper edge and is skipped)
    Rat ratio = make_rat(9, 8);
    Rat d_sq = Rat(1369) * ratio * ratio * ratio * ratio * ratio * ratio;
    sel = select_eta_verification(d_sq, 8, Rat(1369));
    EXPECT_EQ(sel.i0, 3);
    EXPECT_EQ(sel.eta.sq, Rat(1369));
}

TEST(SelectEta, LinearScanExample) {
    // n=8, d=100, |e|=37: smallest i with 100/(9/8)^i inside the window
    EtaSelection sel = select_eta_verification(Rat(10000), 8, Rat(37 * 37));
    EXPECT_EQ(sel.i0, 8);
    // both inequalities, exactly
    Rat lo = make_rat(49, 64) * Rat(37 * 37);
    Rat hi = make_rat(81, 64) * Rat(37 * 37);
    EXPECT_GE(sel.eta.sq, lo);
    EXPECT_LT(sel.eta.sq, hi);
}

TEST(SelectEta, FailsWhenBelowWindow) {
    // d below (1-1/n)|e|: dividing only shrinks it, no i can work
    EXPECT_THROW(select_eta_verification(Rat(100), 8, Rat(10000)), std::runtime_error);
    EXPECT_THROW(select_eta_verification(Rat(100), 8, Rat(0)), std::invalid_argument);
}

TEST(SelectEta, CandidateSet) {
    auto etas = eta_candidates(Rat(100), 2);
    // i_max = floor(log_{3/2} 4) = 3
    ASSERT_EQ(etas.size(), 4u);
    Rat r = make_rat(4, 9);
    EXPECT_EQ(etas[0].sq, Rat(100));
    EXPECT_EQ(etas[1].sq, Rat(100) * r);
    EXPECT_EQ(etas[3].sq, Rat(100) * r * r * r);
}

TEST(SelectEta, DegenerateFallback) {
    SqrtVal T = SqrtVal::from_rational(Rat(15));
    SqrtVal eta = degenerate_eta(T, 5);
    // sqrt(2(m+1)) * eta / T = 1/2 exactly
    EXPECT_EQ(Rat(12) * eta.sq / T.sq, make_rat(1, 4));
}

TEST(Embed, IdentityExample) {
    Basis b = make_basis({{1, 0}, {0, 1}});
    EmbeddedBasis eb = embed(b, IntVec{Int(0), Int(0)}, SqrtVal::from_rational(Rat(1)));
    auto g = eb.gram();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(g[i][j], i == j ? Rat(1) : Rat(0));
}

TEST(Embed, DeterminantIdentity) {
    Rng rng(5);
    Int q(31);
    Basis b = lll_reduce(qary_basis(random_matrix(4, 2, q, rng), q));
    IntVec v(4);
    for (auto& x : v) x = rng.below(q);
    SqrtVal eta = SqrtVal::from_square(make_rat(7, 3));
    EmbeddedBasis eb = embed(b, v, eta);

    // det(Gram(B')) == eta^2 * det(B)^2, via rational elimination on the Gram
    auto g = eb.gram();
    Rat det(1);
    for (std::size_t c = 0; c < g.size(); ++c) {
        std::size_t piv = c;
        while (piv < g.size() && g[piv][c] == 0) ++piv;
        ASSERT_LT(piv, g.size());
        if (piv != c) {
            std::swap(g[piv], g[c]);
            det = -det;
        }
        det *= g[c][c];
        for (std::size_t i = c + 1; i < g.size(); ++i) {
            Rat f = g[i][c] / g[c][c];
            for (std::size_t j = c; j < g.size(); ++j) g[i][j] -= f * g[c][j];
        }
    }
    Int det_b = determinant(b);
    EXPECT_EQ(det, eta.sq * Rat(det_b) * Rat(det_b));
    EXPECT_THROW(embed(b, IntVec{Int(0)}, eta), std::invalid_argument);
}

TEST(Embed, TargetCoefficientVector) {
    // coefficients (-alpha, 1) produce (v - u, eta): head v - sum alpha_i b_i
    Basis b = make_basis({{2, 1, 0}, {0, 3, 1}, {1, 0, 4}});
    IntVec alpha{Int(2), Int(-1), Int(1)};
    IntVec u(3, Int(0));
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) u[i] += alpha[j] * b.cols[j][i];
    IntVec e{Int(1), Int(0), Int(-1)};
    IntVec v = add(u, e);
    SqrtVal eta = SqrtVal::from_square(make_rat(9, 4));
    EmbeddedBasis eb = embed(b, v, eta);

    IntVec head(3, Int(0));
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) head[i] += -alpha[j] * b.cols[j][i];
    head = add(head, v);
    EXPECT_EQ(head, e);  // = v - u

    // quadratic form at (-alpha, 1) equals |e|^2 + eta^2
    auto g = eb.gram();
    RatVec coeff{Rat(-2), Rat(1), Rat(-1), Rat(1)};
    Rat nsq(0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) nsq += coeff[i] * coeff[j] * g[i][j];
    EXPECT_EQ(nsq, Rat(norm_sq(e)) + eta.sq);
}

TEST(Enumeration, MatchesDirectBoxSearch) {
    Basis b = make_basis({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    Rat radius_sq(40);
    auto found = enumerate_coeffs(gram_matrix(b), radius_sq);

    // independent oracle: exhaustive coefficient box
    std::set<IntVec> expected;
    for (long x0 = -8; x0 <= 8; ++x0)
        for (long x1 = -8; x1 <= 8; ++x1)
            for (long x2 = -8; x2 <= 8; ++x2) {
                if (x0 == 0 && x1 == 0 && x2 == 0) continue;
                IntVec coeff{Int(x0), Int(x1), Int(x2)};
                IntVec vec(3, Int(0));
                for (std::size_t j = 0; j < 3; ++j)
                    for (std::size_t i = 0; i < 3; ++i) vec[i] += coeff[j] * b.cols[j][i];
                if (Rat(norm_sq(vec)) > radius_sq) continue;
                bool canonical = false;
                for (const Int& c : coeff) {
                    if (c > 0) { canonical = true; break; }
                    if (c < 0) break;
                }
                if (canonical) expected.insert(coeff);
            }
    EXPECT_EQ(std::set<IntVec>(found.begin(), found.end()), expected);
}

TEST(ShortestVector, Examples) {
    Basis five_i = make_basis({{5, 0}, {0, 5}});
    SvpResult r = lambda1_bruteforce(five_i);
    EXPECT_EQ(r.norm_sq, 25);

    IntMat A = {{1}, {2}};
    Basis q5 = qary_basis(A, Int(5));
    EXPECT_EQ(lambda1_bruteforce(q5).norm_sq, 5);  // (1,2)

    // lattice invariant: reduced and unreduced bases agree
    Basis skew = make_basis({{1, 0}, {1000000, 1}});
    EXPECT_EQ(lambda1_bruteforce(lll_reduce(skew)).norm_sq,
              shortest_vector_bruteforce(skew, Rat(2)).norm_sq);

    EnumOptions tiny;
    tiny.max_nodes = 2;
    Basis big = make_basis({{3, 1, 0, 1}, {1, 4, 1, 0}, {0, 1, 5, 1}, {1, 0, 1, 6}});
    EXPECT_THROW(shortest_vector_bruteforce(big, Rat(100), tiny), std::runtime_error);
}

TEST(GapProperty, HoldsOnPlantedInstances) {
    ReductionParams params = derive_params(2, {{"q", "97"}, {"m", "4"}});
    PreparedInstance prep = prepare_instance(params, 31);
    GapReport rep = check_gap_property(prep.eb, prep.target, prep.T_eff,
                                       4 * prep.target.w_norm_sq());
    EXPECT_TRUE(rep.violations.empty());
    EXPECT_GT(rep.enumerated, 0);
}

TEST(GapProperty, ForcedViolationReported) {
    // B' = I_3, target (0,0,1): the unit vector (1,0,0) is a non-multiple with
    // norm 1; an inflated T makes it fall under T/sqrt(2)
    Basis b = make_basis({{1, 0}, {0, 1}});
    EmbeddedBasis eb = embed(b, IntVec{Int(0), Int(0)}, SqrtVal::from_rational(Rat(1)));
    TargetVector target{IntVec{Int(0), Int(0)}, SqrtVal::from_rational(Rat(1)),
                        IntVec{Int(0), Int(0)}};
    SqrtVal T_big = SqrtVal::from_rational(Rat(2));
    GapReport rep = check_gap_property(eb, target, T_big, Rat(4));
    EXPECT_FALSE(rep.violations.empty());
    for (const auto& v : rep.violations) {
        // every reported vector must genuinely be a non-multiple of (0, 0, eta)
        bool head_zero = v.coeffs[0] == 0 && v.coeffs[1] == 0;
        EXPECT_FALSE(head_zero);
    }
}

TEST(GapProperty, MultiplesOfTargetExcluded) {
    Basis b = make_basis({{1, 0}, {0, 1}});
    EmbeddedBasis eb = embed(b, IntVec{Int(0), Int(0)}, SqrtVal::from_rational(Rat(1)));
    TargetVector target{IntVec{Int(0), Int(0)}, SqrtVal::from_rational(Rat(1)),
                        IntVec{Int(0), Int(0)}};
    // T small enough that only the target multiples fall below T/sqrt(2)
    SqrtVal T = SqrtVal::from_rational(Rat(1));
    GapReport rep = check_gap_property(eb, target, T, Rat(1));
    EXPECT_TRUE(rep.violations.empty());
}

TEST(IntegralCoefficients, SolvesAndRejects) {
    Basis b = make_basis({{2, 0}, {1, 3}});
    EXPECT_EQ(integral_coefficients(b, IntVec{Int(5), Int(3)}), (IntVec{Int(2), Int(1)}));
    EXPECT_THROW(integral_coefficients(b, IntVec{Int(1), Int(0)}), std::runtime_error);
}

TEST(LatticePremise, ThresholdBehaviour) {
    EXPECT_TRUE(lattice_premise_holds(Int(97), 2, 4));    // 97^(1/2) ~ 9.85
    EXPECT_FALSE(lattice_premise_holds(Int(5), 2, 4));    // 5^(1/2) ~ 2.24
    EXPECT_FALSE(lattice_premise_holds(Int(97), 2, 2));   // exponent 0 -> 1
}
