#pragma once

#include <cstdint>
#include <vector>

#include "lwedcp/params.hpp"
#include "lwedcp/rng.hpp"

namespace lwedcp {

// One planted LWE instance. A is m x n with entries in [0, q); s is the
// planted secret (kept for verification only); e is the signed error vector;
// v = A s + e mod q.
struct LweInstance {
    int n = 0;
    int m = 0;
    Int q;
    IntMat A;  // m rows, n columns
    IntVec s;
    IntVec e;
    IntVec v;
    std::uint64_t seed = 0;

    // v - A s - e == 0 (mod q), coordinate-wise
    bool check_identity() const;
    double e_norm() const;
};

// Tail bound (d * exp((1 - d^2)/2))^n for the discrete Gaussian; requires d > 1.
double gaussian_tail_bound(double d, int n);

// Vector of iid discrete Gaussian samples on Z with density proportional to
// exp(-pi x^2 / s_param^2). The standard deviation of the output is
// s_param / sqrt(2 pi); callers that think in standard deviations pass
// s_param = sigma * sqrt(2 pi). Sampling is rejection from a two-sided
// geometric envelope, no CDF tables.
std::vector<long> sample_discrete_gaussian(std::size_t dim, double s_param, Rng& rng);

// (1 + eps/2) * alpha * q * sqrt(m / (2 pi))  ==  (1 + eps/2) * sigma * sqrt(m / (2 pi))
double error_norm_bound(const ReductionParams& params);

bool has_full_column_rank_mod_q(const IntMat& A, const Int& q);

// A and s uniform, e discrete Gaussian with standard deviation sigma.
// e is resampled until its norm satisfies error_norm_bound; A is resampled
// until it has full column rank mod q. Requires prime q.
LweInstance gen_lwe_instance(const ReductionParams& params, std::uint64_t seed,
                             int retry_cap = 100);

}  // namespace lwedcp
