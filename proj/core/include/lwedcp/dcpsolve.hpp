#pragma once

#include "lwedcp/dcpmap.hpp"
#include "lwedcp/lattice.hpp"

namespace lwedcp {

// Desk-scale DCP stand-in: both cosets are classically available, so d is
// x - y, cross-checked for consistency (up to global sign) across samples.
Int solve_dcp_stub(const std::vector<DcpSample>& samples);

// Balanced base-R digits of d, digits in (-R/2, R/2]. Throws when d does not
// fit in m such digits (alpha too large for R).
IntVec digits_to_alpha(const Int& d, const Int& R, int m);

struct SolveReport {
    IntVec alpha_recovered;
    int sign = 0;   // the sign choice whose residual passed; 0 when none
    IntVec s_recovered;
    bool recovered = false;       // some sign produced a small residual
    bool matched = false;         // s_recovered equals the planted secret
    bool sign_anomaly = false;    // both distinct signs passed the residual test
    double residual_norm = -1.0;  // |v - A s mod q| with balanced residues
};

// Solves A s = u (mod prime q) by exact modular elimination, pivoting on the
// first nonzero element. Throws when the system is inconsistent.
IntVec solve_mod_q(const IntMat& A, const IntVec& u, const Int& q);

// For each sign choice, u = sign * sum_i alpha_i b_i (+ translation when the
// pipeline reduced v by a lattice vector first), s from A s = u mod q, and
// the candidate error v - u checked against error_norm_bound.
SolveReport recover_secret(const IntVec& alpha, int sign, const Basis& B,
                           const LweInstance& instance, const ReductionParams& params,
                           const IntVec* translation = nullptr);

}  // namespace lwedcp
