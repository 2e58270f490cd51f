#pragma once

#include <string>
#include <vector>

#include "lwedcp/params.hpp"

namespace lwedcp {

// Deficit terms of the per-register success probability:
// A log2(n) sqrt(log2 n) / n^delta  and  6 sigma m / (sqrt(2 pi) M).
double p_one_deficit(const ReductionParams& params);
double p_one(const ReductionParams& params);

// p_one ^ (m log2 M), evaluated through log1p for stability.
double p_com(const ReductionParams& params);

struct ProbabilityRow {
    int n = 0;
    int m = 0;
    double p_one = 0;
    double p_com = 0;
    double deficit = 0;
};

std::vector<ProbabilityRow> table1(const std::vector<int>& ns);
std::string table1_csv(const std::vector<ProbabilityRow>& rows);

struct Figure1Point {
    int n = 0;
    int q_exp = 0;
    double p_com = 0;
};

// P_com over a grid of n and q = n^e, the q-dependence entering through the
// first deficit term as 1/q (anchored so e = 5 reproduces p_com exactly).
std::vector<Figure1Point> figure1_data(int n_lo, int n_hi, int n_step,
                                       const std::vector<int>& q_exponents);
std::string figure1_csv(const std::vector<Figure1Point>& points);

}  // namespace lwedcp
