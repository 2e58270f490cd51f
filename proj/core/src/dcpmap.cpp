#include "lwedcp/dcpmap.hpp"

#include <cmath>
#include <stdexcept>

namespace lwedcp {

Int pack_g(const IntVec& b, const Int& R) {
    Int acc = 0;
    for (std::size_t i = b.size(); i-- > 0;) {
        if (b[i] < 0 || b[i] >= R) throw std::invalid_argument("pack_g: coordinate outside [0, R)");
        acc = acc * R + b[i];
    }
    return acc;
}

IntVec unpack_g(const Int& x, const Int& R, int m) {
    if (m < 0) throw std::invalid_argument("unpack_g: negative m");
    if (x < 0 || x >= pow_int(R, static_cast<unsigned long>(m)))
        throw std::invalid_argument("unpack_g: value outside [0, R^m)");
    IntVec digits(static_cast<std::size_t>(m));
    Int rest = x;
    for (int i = 0; i < m; ++i) {
        digits[static_cast<std::size_t>(i)] = mod_pos(rest, R);
        rest = (rest - digits[static_cast<std::size_t>(i)]) / R;
    }
    return digits;
}

IntVec h_mod(const IntVec& a, const Int& R) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_pos(a[i], R);
    return out;
}

Int legacy_f_pack(const IntVec& a, const Int& M) {
    const Int radix = 2 * M;
    Int acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] < 0 || a[i] >= M)
            throw std::invalid_argument("legacy_f_pack: coordinate outside [0, M)");
        acc = acc * radix + a[i];
    }
    return acc;
}

DcpSample map_to_dcp(const TwoPointRecord& rec, const Int& R) {
    if (rec.singleton) throw std::invalid_argument("map_to_dcp: singleton record");
    IntVec hx = h_mod(rec.a, R);
    IntVec hy = h_mod(rec.a_prime, R);

    DcpSample s;
    s.R = R;
    s.m = static_cast<int>(rec.a.size());
    s.x = pack_g(hx, R);
    s.y = pack_g(hy, R);
    s.valid = true;
    for (std::size_t i = 0; i < hx.size(); ++i) {
        if (hx[i] - hy[i] != rec.a[i] - rec.a_prime[i]) {
            s.valid = false;  // residue wrapped relative to the partner
            break;
        }
    }
    return s;
}

double validity_probability(const ReductionParams& params) {
    Int mq2 = Int(params.m) * params.q * params.q;
    if (mq2 >= params.R)
        throw std::invalid_argument("validity_probability: m q^2 >= R (R too small)");
    const double per_coord = to_double(make_rat(mq2, params.R));
    return std::pow(1.0 - per_coord, params.m);
}

Int alpha_coefficient_bound(const ReductionParams& params) {
    return Int(params.m) * params.q * params.q;
}

long ancilla_qubits(const ReductionParams& params) {
    const std::size_t bits = mpz_sizeinbase(params.R.get_mpz_t(), 2);
    const bool pow2 = mpz_popcount(params.R.get_mpz_t()) == 1;
    const long log2R = static_cast<long>(pow2 ? bits - 1 : bits);
    return static_cast<long>(params.m) * log2R;
}

Int group_size_legacy(const ReductionParams& params) {
    return pow_int(2 * params.M, static_cast<unsigned long>(params.m));
}

Int group_size_new(const ReductionParams& params) {
    return pow_int(params.R, static_cast<unsigned long>(params.m));
}

}  // namespace lwedcp
