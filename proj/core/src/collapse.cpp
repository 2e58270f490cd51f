#include "lwedcp/collapse.hpp"

#include <cmath>
#include <stdexcept>

namespace lwedcp {

std::size_t TwoPointInput::singleton_count() const {
    std::size_t c = 0;
    for (const auto& r : records)
        if (r.singleton) ++c;
    return c;
}

long records_needed(const ReductionParams& params) {
    const std::size_t bits = mpz_sizeinbase(params.M.get_mpz_t(), 2);
    // ceil(log2 M): sizeinbase gives floor(log2)+1, exact powers of two need one less
    const bool pow2 = mpz_popcount(params.M.get_mpz_t()) == 1;
    const long log2M = static_cast<long>(pow2 ? bits - 1 : bits);
    return static_cast<long>(params.m) * log2M;
}

TwoPointRecord simulate_register(const EmbeddedBasis& eb, const TargetVector& target,
                                 const ReductionParams& params, const SqrtVal& T_eff,
                                 std::uint64_t w_seed, Rng& rng) {
    const std::size_t m = eb.B.rank();
    const Int& M = params.M;
    CellOffsets w = CellOffsets::draw(m + 1, w_seed);

    const int t = rng.coin() ? 1 : 0;
    IntVec a(m + 1);
    for (std::size_t i = 0; i <= m; ++i) a[i] = rng.below(M);

    // the only possible partner has opposite t and the alpha-shifted head
    IntVec partner(m + 1);
    bool in_range = true;
    for (std::size_t i = 0; i < m; ++i) {
        partner[i] = (t == 0) ? Int(a[i] - target.alpha[i]) : Int(a[i] + target.alpha[i]);
        if (partner[i] < 0 || partner[i] >= M) in_range = false;
    }
    partner[m] = a[m];  // the inert coordinate; any value gives the same cell

    TwoPointRecord rec;
    rec.t_measured = t;
    rec.w_seed = w_seed;
    rec.cell = oracle_F(t, a, eb, w, T_eff, params.M);

    bool paired = false;
    if (in_range) {
        CellLabel other = oracle_F(1 - t, partner, eb, w, T_eff, params.M);
        paired = (other == rec.cell);
    }

    IntVec head(a.begin(), a.begin() + m);
    if (paired) {
        IntVec partner_head(partner.begin(), partner.begin() + m);
        rec.singleton = false;
        if (t == 0) {
            rec.a = head;
            rec.a_prime = partner_head;
        } else {
            rec.a = partner_head;
            rec.a_prime = head;
        }
    } else {
        rec.singleton = true;
        rec.a = head;
        rec.a_prime = head;
    }
    return rec;
}

TwoPointInput build_two_point_input(const EmbeddedBasis& eb, const TargetVector& target,
                                    const ReductionParams& params, const SqrtVal& T_eff,
                                    Rng& rng, long record_count_override) {
    const long count = record_count_override > 0 ? record_count_override : records_needed(params);
    TwoPointInput input;
    input.m = static_cast<int>(eb.B.rank());
    input.M = params.M;
    input.records.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        std::uint64_t w_seed = rng.u64();
        input.records.push_back(simulate_register(eb, target, params, T_eff, w_seed, rng));
    }
    return input;
}

namespace {

bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

IntVec negate(const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

// canonical orientation: first nonzero coordinate positive
bool is_canonical(const IntVec& v) {
    for (const Int& x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return true;  // zero vector counts as canonical
}

}  // namespace

ExtractedDifference extract_difference(const TwoPointInput& input) {
    ExtractedDifference out;
    IntVec canonical;
    long plus = 0, minus = 0;
    bool have = false;

    for (const auto& rec : input.records) {
        if (rec.singleton) continue;
        IntVec diff = sub(rec.a, rec.a_prime);
        IntVec canon = is_canonical(diff) ? diff : negate(diff);
        int orientation = is_canonical(diff) ? 1 : -1;
        if (!have) {
            canonical = canon;
            have = true;
        } else if (canon != canonical) {
            throw std::runtime_error("extract_difference: inconsistent differences across records");
        }
        if (is_zero(diff)) {
            ++plus;  // zero difference carries no orientation
        } else if (orientation > 0) {
            ++plus;
        } else {
            ++minus;
        }
        ++out.used;
    }
    if (!have) throw std::runtime_error("extract_difference: all records are singletons");
    out.alpha = canonical;
    out.sign = (minus > plus) ? -1 : 1;
    return out;
}

}  // namespace lwedcp
