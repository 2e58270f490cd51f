#pragma once

#include <map>
#include <string>

#include "lwedcp/bigint.hpp"

namespace lwedcp {

// Every derived scalar of the reduction in one place. All logarithms in the
// parameter formulas are base 2. Defaults follow the analytic regime
// (q = n^5, M = 2^n, R = n^13, sigma = sqrt(n)); desk-scale runs override
// q, m, M and R with small values.
struct ReductionParams {
    int n = 0;
    Int q;             // modulus; instance generation additionally requires an odd prime
    int m = 0;         // sample count, default nearest integer to n*log2(n)
    Int M;             // coordinate range, default 2^n
    double sigma = 0;  // Gaussian standard deviation, default sqrt(n)
    double alpha = 0;  // sigma / q
    double epsilon = 0;
    double delta = 3.0;
    double A_coeff = 0;  // 2(2 + 1/n)(1 + eps/2)/sqrt(pi)
    double T = 0;        // claimed lambda_1 lower bound, default q
    Int R;               // DCP per-coordinate modulus, default n^13

    // Throws std::invalid_argument when an invariant fails.
    void validate() const;
};

// Lower end of the admissible epsilon interval:
// 1 / (n*sqrt(1 + 1/(2n)) + n - 1/2). Strictly decreasing in n.
double epsilon_lo(int n);

double recompute_A_coeff(int n, double epsilon);

using Overrides = std::map<std::string, std::string>;

// Populates all fields from n, applies overrides last, validates.
// Recognized override keys: q, m, M, sigma, epsilon, delta, T, R.
ReductionParams derive_params(int n, const Overrides& overrides = {});

}  // namespace lwedcp
