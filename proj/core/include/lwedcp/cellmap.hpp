#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lwedcp/lattice.hpp"
#include "lwedcp/params.hpp"

namespace lwedcp {

// Per-run random offsets, one per label coordinate. Stored as 53-bit dyadic
// numerators so every floor below is evaluated in exact arithmetic and labels
// are bit-reproducible from the seed.
struct CellOffsets {
    std::vector<std::uint64_t> bits;  // w_i = bits[i] / 2^53
    std::uint64_t seed = 0;

    static CellOffsets draw(std::size_t count, std::uint64_t seed);
    Rat value(std::size_t i) const;
    std::size_t size() const { return bits.size(); }
};

struct CellLabel {
    IntVec r;

    bool operator==(const CellLabel& o) const { return r == o.r; }
    bool operator<(const CellLabel& o) const { return r < o.r; }
};

// Value of f(t, a) = sum_{i<=m} a_i b'_i + t b'_{m+1}: an integer head of
// length m plus t copies of eta in the last coordinate.
struct FPoint {
    IntVec head;
    int t = 0;
};

// a has m+1 coordinates in [0, M); the last one is carried but does not
// enter the sum (the map is constant in it).
FPoint f_map(int t, const IntVec& a, const EmbeddedBasis& eb, const Int& M);

// r_i = floor(sqrt(2(m+1)) * v_i / T - w_i), evaluated exactly.
CellLabel g_map(const RatVec& coords, const SqrtVal& T_eff, const CellOffsets& w);
CellLabel g_map(const FPoint& p, const EmbeddedBasis& eb, const SqrtVal& T_eff,
                const CellOffsets& w);

CellLabel oracle_F(int t, const IntVec& a, const EmbeddedBasis& eb, const CellOffsets& w,
                   const SqrtVal& T_eff, const Int& M);

// Exhaustive partition of {0,1} x {0..M-1}^m by F. The inert last coordinate
// of a is quotiented out (every class is degenerate in it). Each entry is
// (t, head of a).
using CollisionClasses = std::map<CellLabel, std::vector<std::pair<int, IntVec>>>;
CollisionClasses collision_classes(const EmbeddedBasis& eb, const CellOffsets& w,
                                   const SqrtVal& T_eff, const Int& M,
                                   const Int& domain_cap = Int(1) << 24);

// Closed-form lower bound 1 - A log(n) sqrt(log n) / n^delta - 6 alpha q m / (sqrt(2 pi) M)
// on the per-register pairing probability at the default parameter regime.
double pairing_probability_bound(const ReductionParams& params);

// Exact per-register pairing probability for a planted target: partner
// in-range times all label coordinates agreeing, marginalized over the
// offsets.
double register_pair_rate(const TargetVector& target, const Int& M, const SqrtVal& T_eff);

// Union-bound analogue computed from the instance's actual parameters:
// 1 - sum_i min(1, scaled gap_i) - sum_i min(1, |alpha_i| / M).
double pairing_bound_instance(const TargetVector& target, const Int& M, const SqrtVal& T_eff);

}  // namespace lwedcp
