#include "lwedcp/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace lwedcp {

bool LweInstance::check_identity() const {
    for (int i = 0; i < m; ++i) {
        Int lhs = v[i] - dot(A[i], s) - e[i];
        if (mod_pos(lhs, q) != 0) return false;
    }
    return true;
}

double LweInstance::e_norm() const { return std::sqrt(to_double(norm_sq(e))); }

double gaussian_tail_bound(double d, int n) {
    if (!(d > 1.0)) throw std::invalid_argument("gaussian_tail_bound: requires d > 1");
    if (n < 1) throw std::invalid_argument("gaussian_tail_bound: requires n >= 1");
    // (d e^{(1-d^2)/2})^n evaluated in log space
    return std::exp(n * (std::log(d) + (1.0 - d * d) / 2.0));
}

namespace {

// One sample with density proportional to exp(-x^2 / (2 sigma^2)).
// Envelope: two-sided geometric with ratio exp(-1/sigma); the acceptance
// probability exp(-(|x|-sigma)^2 / (2 sigma^2)) is at most 1 with equality
// near |x| = sigma.
long sample_centered_gaussian(double sigma, Rng& rng) {
    const double ratio = std::exp(-1.0 / sigma);
    while (true) {
        unsigned long k = 0;
        while (rng.unit53() < ratio) ++k;
        const bool negative = rng.coin();
        if (k == 0 && negative) continue;  // count 0 once
        const double t = (static_cast<double>(k) - sigma);
        const double accept = std::exp(-t * t / (2.0 * sigma * sigma));
        if (rng.unit53() < accept) return negative ? -static_cast<long>(k) : static_cast<long>(k);
    }
}

}  // namespace

std::vector<long> sample_discrete_gaussian(std::size_t dim, double s_param, Rng& rng) {
    if (!(s_param > 0)) throw std::invalid_argument("sample_discrete_gaussian: s_param must be positive");
    const double sigma = s_param / std::sqrt(2.0 * M_PI);
    std::vector<long> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = sample_centered_gaussian(sigma, rng);
    return out;
}

double error_norm_bound(const ReductionParams& params) {
    return (1.0 + params.epsilon / 2.0) * params.sigma *
           std::sqrt(params.m / (2.0 * M_PI));
}

bool has_full_column_rank_mod_q(const IntMat& A, const Int& q) {
    if (A.empty()) return false;
    const std::size_t m = A.size(), n = A[0].size();
    if (m < n) return false;
    IntMat w(m, IntVec(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = mod_pos(A[i][j], q);

    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = row;
        while (piv < m && w[piv][col] == 0) ++piv;
        if (piv == m) return false;
        std::swap(w[piv], w[row]);
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), w[row][col].get_mpz_t(), q.get_mpz_t()) == 0)
            return false;  // non-invertible pivot (q not prime or shared factor)
        for (std::size_t i = row + 1; i < m; ++i) {
            if (w[i][col] == 0) continue;
            Int factor = mod_pos(w[i][col] * inv, q);
            for (std::size_t j = col; j < n; ++j)
                w[i][j] = mod_pos(w[i][j] - factor * w[row][j], q);
        }
        ++row;
    }
    return true;
}

LweInstance gen_lwe_instance(const ReductionParams& params, std::uint64_t seed, int retry_cap) {
    params.validate();
    if (!is_probable_prime(params.q))
        throw std::invalid_argument("gen_lwe_instance: q must be prime (override q at desk scale)");

    Rng rng(seed);
    LweInstance inst;
    inst.n = params.n;
    inst.m = params.m;
    inst.q = params.q;
    inst.seed = seed;

    // A uniform with full column rank mod q
    int rank_tries = 0;
    do {
        if (++rank_tries > retry_cap)
            throw std::runtime_error("gen_lwe_instance: could not draw full-rank A");
        inst.A.assign(params.m, IntVec(params.n));
        for (int i = 0; i < params.m; ++i)
            for (int j = 0; j < params.n; ++j) inst.A[i][j] = rng.below(params.q);
    } while (!has_full_column_rank_mod_q(inst.A, params.q));

    inst.s.resize(params.n);
    for (int j = 0; j < params.n; ++j) inst.s[j] = rng.below(params.q);

    // e resampled until the norm bound holds
    const double bound = error_norm_bound(params);
    const double bound_sq = bound * bound;
    const double s_param = params.sigma * std::sqrt(2.0 * M_PI);
    int tries = 0;
    while (true) {
        if (++tries > retry_cap)
            throw std::runtime_error(
                "gen_lwe_instance: error vector exceeded the norm bound " +
                std::to_string(retry_cap) + " times; sigma too large for m");
        std::vector<long> e = sample_discrete_gaussian(params.m, s_param, rng);
        double nsq = 0;
        for (long x : e) nsq += static_cast<double>(x) * static_cast<double>(x);
        if (nsq <= bound_sq) {
            inst.e.assign(e.begin(), e.end());
            break;
        }
    }

    inst.v.resize(params.m);
    for (int i = 0; i < params.m; ++i)
        inst.v[i] = mod_pos(dot(inst.A[i], inst.s) + inst.e[i], params.q);
    return inst;
}

}  // namespace lwedcp
