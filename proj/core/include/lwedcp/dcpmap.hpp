#pragma once

#include "lwedcp/collapse.hpp"
#include "lwedcp/params.hpp"

namespace lwedcp {

// Bijective mixed-radix packing: b_1 + b_2 R + ... + b_m R^{m-1}, onto [0, R^m).
Int pack_g(const IntVec& b, const Int& R);
// Little-endian base-R digits of x in [0, R^m).
IntVec unpack_g(const Int& x, const Int& R, int m);

// Coordinate-wise nonnegative residue mod R.
IntVec h_mod(const IntVec& a, const Int& R);

// The older packing with radix 2M, from [0, M)^m into [0, (2M)^m).
Int legacy_f_pack(const IntVec& a, const Int& M);

// One DCP input coset pair over Z_{R^m}.
struct DcpSample {
    Int x;
    Int y;
    Int R;
    int m = 0;
    bool valid = false;  // set when h preserved the difference without wraparound
};

// x = pack(h(a)), y = pack(h(a')); requires a non-singleton record.
DcpSample map_to_dcp(const TwoPointRecord& rec, const Int& R);

// (1 - m q^2 / R)^m; throws when m q^2 >= R.
double validity_probability(const ReductionParams& params);

// m q^2, the per-coordinate magnitude claim for alpha.
Int alpha_coefficient_bound(const ReductionParams& params);

// Ancilla accounting for the standard oracle of h: m * ceil(log2 R) qubits.
long ancilla_qubits(const ReductionParams& params);

// Group sizes before/after the improved packing: (2M)^m and R^m.
Int group_size_legacy(const ReductionParams& params);
Int group_size_new(const ReductionParams& params);

}  // namespace lwedcp
