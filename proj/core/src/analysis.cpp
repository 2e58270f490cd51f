#include "lwedcp/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lwedcp {

namespace {

double log2_int(const Int& x) {
    // exact for powers of two, otherwise via signed mantissa + exponent
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp2);
}

}  // namespace

double p_one_deficit(const ReductionParams& params) {
    // the displayed formula: q enters only through sigma = alpha q, so the
    // first term is A L^{3/2} / n^delta regardless of the q override
    const double L = std::log2(static_cast<double>(params.n));
    const double d1 =
        params.A_coeff * L * std::sqrt(L) / std::pow(static_cast<double>(params.n), params.delta);
    const double d2 =
        6.0 * params.sigma * params.m / (std::sqrt(2.0 * M_PI) * to_double(params.M));
    return d1 + d2;
}

double p_one(const ReductionParams& params) { return 1.0 - p_one_deficit(params); }

double p_com(const ReductionParams& params) {
    const double exponent = static_cast<double>(params.m) * log2_int(params.M);
    return std::exp(exponent * std::log1p(-p_one_deficit(params)));
}

std::vector<ProbabilityRow> table1(const std::vector<int>& ns) {
    std::vector<ProbabilityRow> rows;
    rows.reserve(ns.size());
    for (int n : ns) {
        ReductionParams p = derive_params(n);
        ProbabilityRow row;
        row.n = n;
        row.m = p.m;
        row.deficit = p_one_deficit(p);
        row.p_one = 1.0 - row.deficit;
        row.p_com = p_com(p);
        rows.push_back(row);
    }
    return rows;
}

std::string table1_csv(const std::vector<ProbabilityRow>& rows) {
    std::string out = "n,m,p_one_deficit,p_com\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.12g,%.12g\n", r.n, r.m, r.deficit, r.p_com);
        out += buf;
    }
    return out;
}

std::vector<Figure1Point> figure1_data(int n_lo, int n_hi, int n_step,
                                       const std::vector<int>& q_exponents) {
    if (n_lo < 2 || n_hi < n_lo || n_step < 1)
        throw std::invalid_argument("figure1_data: bad n range");
    std::vector<Figure1Point> out;
    for (int e : q_exponents) {
        if (e < 5) throw std::invalid_argument("figure1_data: q exponents must be >= 5");
        for (int n = n_lo; n <= n_hi; n += n_step) {
            ReductionParams p = derive_params(n);
            const double L = std::log2(static_cast<double>(n));
            // first deficit scales as 1/q: exponent 3 at q = n^5 becomes 3 + (e - 5)
            const double d1 =
                p.A_coeff * L * std::sqrt(L) /
                std::pow(static_cast<double>(n), p.delta + static_cast<double>(e - 5));
            const double d2 = 6.0 * p.sigma * p.m / (std::sqrt(2.0 * M_PI) * to_double(p.M));
            const double exponent = static_cast<double>(p.m) * static_cast<double>(n);
            Figure1Point pt;
            pt.n = n;
            pt.q_exp = e;
            pt.p_com = std::exp(exponent * std::log1p(-(d1 + d2)));
            out.push_back(pt);
        }
    }
    return out;
}

std::string figure1_csv(const std::vector<Figure1Point>& points) {
    std::string out = "n,q_exp,p_com\n";
    char buf[96];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.12g\n", p.n, p.q_exp, p.p_com);
        out += buf;
    }
    return out;
}

}  // namespace lwedcp
