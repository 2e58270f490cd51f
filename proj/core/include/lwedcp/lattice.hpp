#pragma once

#include <optional>
#include <vector>

#include "lwedcp/exact.hpp"
#include "lwedcp/sampling.hpp"

namespace lwedcp {

// Integer lattice basis, stored column-wise.
struct Basis {
    std::vector<IntVec> cols;

    std::size_t rank() const { return cols.size(); }
    std::size_t dim() const { return cols.empty() ? 0 : cols[0].size(); }
};

// Basis of {y in Z^m : y = A s mod q for some s}, computed as the column
// Hermite normal form of the block [A | q I].
Basis qary_basis(const IntMat& A, const Int& q);

// Exact-rational LLL. Same lattice, size-reduced, Lovasz condition for
// delta_lll in (1/4, 1).
Basis lll_reduce(const Basis& basis, const Rat& delta_lll = Rat(99, 100));

// Nearest-plane on an LLL-reduced basis; returns a lattice vector.
IntVec babai_nearest(const Basis& reduced, const RatVec& y);

Int determinant(const Basis& basis);  // square basis, exact

// Gram matrix helpers (exact).
std::vector<RatVec> gram_matrix(const Basis& basis);

// Exact coefficients x with sum_j x_j cols[j] = target (square basis).
// Throws when the solution is not integral (target outside the lattice).
IntVec integral_coefficients(const Basis& basis, const IntVec& target);

// ---- enumeration -------------------------------------------------------

struct EnumOptions {
    long max_nodes = 10'000'000;
};

// All nonzero coefficient vectors x with |B x|^2 <= radius_sq, one
// representative per +-x pair (first nonzero coefficient positive).
// Works from the Gram matrix, so the last basis row may be irrational as
// long as the Gram entries are rational.
std::vector<IntVec> enumerate_coeffs(const std::vector<RatVec>& gram, const Rat& radius_sq,
                                     const EnumOptions& opts = {});

struct SvpResult {
    IntVec coeffs;
    IntVec vec;
    Int norm_sq;
};

// Exhaustive shortest vector within the given radius; ties broken by
// (norm, lexicographic coefficient vector). Throws if the ball is empty or the
// node budget is exceeded.
SvpResult shortest_vector_bruteforce(const Basis& basis, const Rat& radius_sq,
                                     const EnumOptions& opts = {});
// Convenience: radius = smallest basis column norm (ball is never empty).
SvpResult lambda1_bruteforce(const Basis& basis, const EnumOptions& opts = {});

// Exhaustive closest vector (desk scale); returns the lattice vector.
IntVec cvp_bruteforce(const Basis& basis, const RatVec& y, const EnumOptions& opts = {});

// ---- embedding ---------------------------------------------------------

// (m+1)-rank basis [[B, v], [0, eta]]; eta is carried as an exact square
// so all Gram entries stay rational.
struct EmbeddedBasis {
    Basis B;
    IntVec v;
    SqrtVal eta;

    std::size_t rank() const { return B.rank() + 1; }
    // Gram matrix of the m+1 columns (b_i, 0), (v, eta).
    std::vector<RatVec> gram() const;
};

EmbeddedBasis embed(const Basis& B, const IntVec& v, const SqrtVal& eta);

// The short target (v - u, eta) = (e, eta) together with the coefficient
// vector of u in B (the hidden solution).
struct TargetVector {
    IntVec e;
    SqrtVal eta;
    IntVec alpha;

    Rat w_norm_sq() const { return Rat(norm_sq(e)) + eta.sq; }
};

// ---- eta selection -----------------------------------------------------

// Candidate set S = { d / (1+1/n)^i : 0 <= i <= log_{1+1/n}(2^n) }, as exact
// squares d_sq / (1+1/n)^{2i}.
std::vector<SqrtVal> eta_candidates(const Rat& d_sq, int n);

struct EtaSelection {
    SqrtVal eta;
    long i0 = 0;
};

// Verification mode: the member of S with
// (1 - 1/n) |e| <= eta <= (1 + 1/n) |e|, decided by exact squared
// comparisons. Throws when no i in range satisfies the sandwich.
EtaSelection select_eta_verification(const Rat& d_sq, int n, const Rat& e_norm_sq);

// Fallback for the degenerate d = 0 case (v already in the lattice): a small
// positive eta with sqrt(2(m+1)) * eta / T = 1/2 exactly.
SqrtVal degenerate_eta(const SqrtVal& T_eff, int m);

// ---- gap property ------------------------------------------------------

struct GapViolation {
    IntVec coeffs;  // coefficients in B' (length m+1)
    Rat norm_sq;
};

struct GapReport {
    Rat lambda1_sq;        // brute-forced lambda_1(Lambda_q)^2
    double T_claimed = 0;  // the q-based claim, recorded alongside
    bool lemma_premise = false;
    long enumerated = 0;
    std::vector<GapViolation> violations;  // non-multiples of the target with norm <= T_eff/sqrt(2)
};

// Enumerates L(B') up to radius_sq and reports every vector that is not an
// integer multiple of (v - u, eta) yet has squared norm <= T_sq / 2.
GapReport check_gap_property(const EmbeddedBasis& eb, const TargetVector& target,
                             const SqrtVal& T_eff, const Rat& radius_sq,
                             const EnumOptions& opts = {});

// Empirical stand-in for the random-lattice premise: q^{1 - n/m} above the
// sqrt(pi e^{1 + 2w}) threshold with w at its stated ceiling.
bool lattice_premise_holds(const Int& q, int n, int m);

}  // namespace lwedcp
