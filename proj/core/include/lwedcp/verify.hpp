#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lwedcp/analysis.hpp"
#include "lwedcp/cellmap.hpp"
#include "lwedcp/collapse.hpp"
#include "lwedcp/dcpsolve.hpp"

namespace lwedcp {

// Shared front half of the reduction: instance, reduced basis, brute-forced
// lambda_1, Babai translation of v, eta selection and embedding. The planted
// alpha is the coefficient vector of u - c in the reduced basis, where c is
// the Babai point subtracted from v (recorded for secret recovery).
struct PreparedInstance {
    ReductionParams params;
    LweInstance instance;
    Basis reduced;
    IntVec translation;  // Babai lattice point c
    IntVec v_red;        // v - c, the embedded vector
    SqrtVal lambda1;
    SqrtVal T_eff;
    EmbeddedBasis eb;
    TargetVector target;
    long eta_index = -1;  // i0; -1 for the degenerate d = 0 fallback
    bool premise = false;
};

// t_policy: "lambda1" (empirical, default) or "claimed" (T = q).
PreparedInstance prepare_instance(const ReductionParams& params, std::uint64_t gen_seed,
                                  const std::string& t_policy = "lambda1",
                                  const EnumOptions& opts = {});

// Same, starting from an existing instance (stage reruns, enumeration mode).
// forced_eta overrides the eta selection when non-null.
PreparedInstance prepare_from_instance(const ReductionParams& params, const LweInstance& inst,
                                       const std::string& t_policy = "lambda1",
                                       const EnumOptions& opts = {},
                                       const SqrtVal* forced_eta = nullptr);

// ---- verifier reports ----------------------------------------------------

struct GapInstanceResult {
    std::uint64_t seed = 0;
    int m = 0;
    std::string q;
    double lambda1 = 0;
    double T_claimed = 0;
    bool premise = false;
    long enumerated = 0;
    std::vector<std::pair<std::string, double>> violations;  // (coefficients, norm)
};

struct GapVerifyReport {
    std::vector<GapInstanceResult> instances;
    long violations_on_premise_instances = 0;
    long violations_total = 0;
    bool pass = false;  // zero violations on instances satisfying the premise
    std::string to_json_string() const;
};

// Exhaustive short-vector check on random desk-scale instances: every
// enumerated non-multiple of (v-u, eta) must be longer than lambda_1/sqrt(2).
GapVerifyReport verify_theorem1(int instances, std::uint64_t seed, long budget = 1 << 24);

struct CollisionVerifyReport {
    long instances = 0;
    long classes_total = 0;
    long paired_classes = 0;
    long violations = 0;
    bool pass = false;
    std::string to_json_string() const;
};

// Exhaustive collision-class structure: classes of size <= 2, pairs with
// opposite t and head difference exactly +-alpha.
CollisionVerifyReport verify_theorem2(int instances, std::uint64_t seed,
                                      const Int& domain_cap = Int(1) << 20);

struct PairingVerifyReport {
    long trials = 0;
    double empirical_rate = 0;
    double bound = 0;
    double sigma_mc = 0;
    bool pass = false;
    std::string to_json_string() const;
};

// Monte Carlo pairing rate over fresh offsets vs the instance-specific
// closed-form lower bound (one-sided, 3 sigma slack).
PairingVerifyReport verify_theorem3(long trials, std::uint64_t seed);

struct TailRow {
    double s_param = 0;
    double d = 0;
    double empirical = 0;
    double bound = 0;
};

struct TailVerifyReport {
    std::vector<TailRow> rows;
    long draws_per_row = 0;
    bool pass = false;
    std::string to_json_string() const;
};

TailVerifyReport verify_tail(long draws, std::uint64_t seed);

struct Table1RowCheck {
    int n = 0;
    int m = 0;
    double deficit = 0;
    double deficit_ref = 0;
    double p_com = 0;
    double p_com_ref = 0;
    bool pass = false;
};

struct Table1VerifyReport {
    std::vector<Table1RowCheck> rows;
    bool pass = false;
    std::string to_json_string() const;
};

// Reference deficits {6.68, 3.94, 3.05, 1.66}e-6 within 1% relative and
// P_com {0.1545, 0.1857, 0.2020, 0.2438} within +-5e-4.
Table1VerifyReport verify_table1();

}  // namespace lwedcp
