#pragma once

#include <cstdint>
#include <vector>

#include "lwedcp/cellmap.hpp"

namespace lwedcp {

// One post-measurement register. Unless singleton, the two branches carry a
// fixed difference: a - a_prime = +-alpha on all m coordinates. The t = 0
// branch is stored first.
struct TwoPointRecord {
    IntVec a;        // t = 0 branch, first m coordinates
    IntVec a_prime;  // t = 1 branch
    bool singleton = false;
    int t_measured = 0;
    CellLabel cell;
    std::uint64_t w_seed = 0;
};

struct TwoPointInput {
    std::vector<TwoPointRecord> records;
    int m = 0;
    Int M;

    std::size_t singleton_count() const;
    bool all_paired() const { return singleton_count() == 0; }
};

// m * ceil(log2 M) registers make one complete input.
long records_needed(const ReductionParams& params);

// Plant-and-verify simulation of one register: draw (t, a) uniformly,
// construct the unique candidate partner from the planted alpha, keep the
// pair only when the partner is in range and the honest oracle maps both to
// the same cell. Offsets are fresh per register (w_seed).
TwoPointRecord simulate_register(const EmbeddedBasis& eb, const TargetVector& target,
                                 const ReductionParams& params, const SqrtVal& T_eff,
                                 std::uint64_t w_seed, Rng& rng);

TwoPointInput build_two_point_input(const EmbeddedBasis& eb, const TargetVector& target,
                                    const ReductionParams& params, const SqrtVal& T_eff,
                                    Rng& rng, long record_count_override = 0);

struct ExtractedDifference {
    IntVec alpha;       // canonical orientation: first nonzero coordinate positive
    int sign = 1;       // majority orientation of the records relative to alpha
    std::size_t used = 0;
};

// The common difference across non-singleton records; throws when all are
// singleton or the differences are inconsistent.
ExtractedDifference extract_difference(const TwoPointInput& input);

}  // namespace lwedcp
