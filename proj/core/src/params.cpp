#include "lwedcp/params.hpp"

#include <cmath>
#include <stdexcept>

namespace lwedcp {

namespace {

double log2d(double x) { return std::log2(x); }

long parse_long(const std::string& s) {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer override: " + s);
    return v;
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad real override: " + s);
    return v;
}

}  // namespace

double epsilon_lo(int n) {
    if (n < 1) throw std::invalid_argument("epsilon_lo: n must be >= 1");
    double nd = n;
    return 1.0 / (nd * std::sqrt(1.0 + 1.0 / (2.0 * nd)) + nd - 0.5);
}

double recompute_A_coeff(int n, double epsilon) {
    double nd = n;
    return 2.0 * (2.0 + 1.0 / nd) * (1.0 + epsilon / 2.0) / std::sqrt(M_PI);
}

void ReductionParams::validate() const {
    if (n < 2) throw std::invalid_argument("params: n must be >= 2");
    // the analytic default q = n^5 enters formulas as a real number; the
    // odd-prime requirement is enforced on overrides and instance generation
    if (q < 2) throw std::invalid_argument("params: q must be >= 2");
    if (m < 1) throw std::invalid_argument("params: m must be >= 1");
    if (M < 2) throw std::invalid_argument("params: M must be >= 2");
    if (R < 2) throw std::invalid_argument("params: R must be >= 2");
    if (!(sigma > 0)) throw std::invalid_argument("params: sigma must be positive");
    if (!(T > 0)) throw std::invalid_argument("params: T must be positive");
    const double lo = epsilon_lo(n);
    // the open lower bound is tolerated as a limit convention (default = lo)
    if (!(epsilon >= lo) || !(epsilon < 1.0))
        throw std::invalid_argument("params: epsilon outside [epsilon_lo(n), 1)");
    if (!(delta >= 3.0)) throw std::invalid_argument("params: delta must be >= 3");
    if (alpha != sigma / to_double(q))
        throw std::invalid_argument("params: alpha must equal sigma/q");
    const double a_ref = recompute_A_coeff(n, epsilon);
    if (std::abs(A_coeff - a_ref) > 1e-12 * a_ref)
        throw std::invalid_argument("params: A_coeff inconsistent with (n, epsilon)");
}

ReductionParams derive_params(int n, const Overrides& overrides) {
    if (n < 2) throw std::invalid_argument("derive_params: n must be >= 2");

    ReductionParams p;
    p.n = n;
    p.q = pow_int(Int(n), 5);
    p.m = static_cast<int>(std::llround(n * log2d(n)));
    p.M = pow_int(Int(2), static_cast<unsigned long>(n));
    p.sigma = std::sqrt(static_cast<double>(n));
    p.epsilon = epsilon_lo(n);
    p.delta = 3.0;
    p.R = pow_int(Int(n), 13);

    for (const auto& [key, value] : overrides) {
        if (key == "q") {
            Int q = int_from_dec(value);
            if (!is_probable_prime(q) || mpz_even_p(q.get_mpz_t()))
                throw std::invalid_argument("derive_params: q override must be an odd prime");
            p.q = q;
        } else if (key == "m") {
            long m = parse_long(value);
            if (m < 1) throw std::invalid_argument("derive_params: m override must be >= 1");
            p.m = static_cast<int>(m);
        } else if (key == "M") {
            Int M = int_from_dec(value);
            if (M < 2) throw std::invalid_argument("derive_params: M override must be >= 2");
            p.M = M;
        } else if (key == "R") {
            Int R = int_from_dec(value);
            if (R < 2) throw std::invalid_argument("derive_params: R override must be >= 2");
            p.R = R;
        } else if (key == "sigma") {
            p.sigma = parse_double(value);
        } else if (key == "epsilon") {
            p.epsilon = parse_double(value);
        } else if (key == "delta") {
            p.delta = parse_double(value);
        } else if (key == "T") {
            p.T = parse_double(value);
        } else {
            throw std::invalid_argument("derive_params: unknown override key: " + key);
        }
    }

    p.alpha = p.sigma / to_double(p.q);
    p.A_coeff = recompute_A_coeff(p.n, p.epsilon);
    if (overrides.find("T") == overrides.end()) p.T = to_double(p.q);

    p.validate();
    return p;
}

}  // namespace lwedcp
