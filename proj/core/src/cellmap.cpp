#include "lwedcp/cellmap.hpp"

#include <cmath>
#include <stdexcept>

#include "lwedcp/analysis.hpp"
#include "lwedcp/rng.hpp"

namespace lwedcp {

CellOffsets CellOffsets::draw(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    CellOffsets w;
    w.seed = seed;
    w.bits.resize(count);
    for (std::size_t i = 0; i < count; ++i) w.bits[i] = rng.bits53();
    return w;
}

Rat CellOffsets::value(std::size_t i) const {
    return make_rat(Int(static_cast<unsigned long>(bits[i])), Int(1) << 53);
}

FPoint f_map(int t, const IntVec& a, const EmbeddedBasis& eb, const Int& M) {
    const std::size_t m = eb.B.rank();
    if (t != 0 && t != 1) throw std::invalid_argument("f_map: t must be 0 or 1");
    if (a.size() != m + 1) throw std::invalid_argument("f_map: a must have m+1 coordinates");
    for (const Int& c : a)
        if (c < 0 || c >= M) throw std::invalid_argument("f_map: coordinate outside [0, M)");

    FPoint p;
    p.t = t;
    p.head.assign(eb.B.dim(), Int(0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < p.head.size(); ++i) p.head[i] += a[j] * eb.B.cols[j][i];
    if (t == 1)
        for (std::size_t i = 0; i < p.head.size(); ++i) p.head[i] += eb.v[i];
    return p;
}

namespace {

// floor(sqrt(scale_sq) * value - w) with value rational
Int scaled_floor(const Rat& scale_sq, const Rat& value, const Rat& w) {
    int s = sgn(value);
    Rat r = scale_sq * value * value;
    return floor_sqrt_sub(s, r, w);
}

Rat scale_sq_for(std::size_t label_dim, const SqrtVal& T_eff) {
    if (T_eff.sq <= 0) throw std::invalid_argument("g_map: T must be positive");
    return Rat(2 * static_cast<unsigned long>(label_dim)) / T_eff.sq;
}

}  // namespace

CellLabel g_map(const RatVec& coords, const SqrtVal& T_eff, const CellOffsets& w) {
    if (coords.size() != w.size()) throw std::invalid_argument("g_map: offsets length mismatch");
    const Rat scale_sq = scale_sq_for(coords.size(), T_eff);
    CellLabel label;
    label.r.resize(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        label.r[i] = scaled_floor(scale_sq, coords[i], w.value(i));
    return label;
}

CellLabel g_map(const FPoint& p, const EmbeddedBasis& eb, const SqrtVal& T_eff,
                const CellOffsets& w) {
    const std::size_t dim = p.head.size() + 1;
    if (w.size() != dim) throw std::invalid_argument("g_map: offsets length mismatch");
    const Rat scale_sq = scale_sq_for(dim, T_eff);
    CellLabel label;
    label.r.resize(dim);
    for (std::size_t i = 0; i < p.head.size(); ++i)
        label.r[i] = scaled_floor(scale_sq, Rat(p.head[i]), w.value(i));
    // last coordinate is t * eta: floor(t * sqrt(scale_sq * eta_sq) - w)
    label.r[dim - 1] = floor_sqrt_sub(p.t == 0 ? 0 : 1, scale_sq * eb.eta.sq, w.value(dim - 1));
    return label;
}

CellLabel oracle_F(int t, const IntVec& a, const EmbeddedBasis& eb, const CellOffsets& w,
                   const SqrtVal& T_eff, const Int& M) {
    return g_map(f_map(t, a, eb, M), eb, T_eff, w);
}

CollisionClasses collision_classes(const EmbeddedBasis& eb, const CellOffsets& w,
                                   const SqrtVal& T_eff, const Int& M, const Int& domain_cap) {
    const std::size_t m = eb.B.rank();
    Int full_domain = 2 * pow_int(M, static_cast<unsigned long>(m + 1));
    if (full_domain > domain_cap)
        throw std::runtime_error("collision_classes: domain exceeds enumeration cap");
    if (M.fits_ulong_p() == 0)
        throw std::runtime_error("collision_classes: M too large to enumerate");
    const unsigned long Mu = M.get_ui();

    CollisionClasses classes;
    IntVec a(m + 1, Int(0));  // last coordinate fixed at 0 (quotient representative)
    std::vector<unsigned long> idx(m, 0);
    for (int t = 0; t <= 1; ++t) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            for (std::size_t i = 0; i < m; ++i) a[i] = Int(idx[i]);
            CellLabel label = oracle_F(t, a, eb, w, T_eff, M);
            classes[label].emplace_back(t, IntVec(a.begin(), a.begin() + m));
            // odometer
            std::size_t pos = 0;
            while (pos < m) {
                if (++idx[pos] < Mu) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == m) break;
        }
    }
    return classes;
}

double pairing_probability_bound(const ReductionParams& params) { return p_one(params); }

namespace {

// P(floor agrees at a coordinate with scaled gap sqrt(gap_sq)) = max(0, 1 - gap)
double agree_probability(const Rat& gap_sq) {
    double g = std::sqrt(to_double(gap_sq));
    return g >= 1.0 ? 0.0 : 1.0 - g;
}

}  // namespace

double register_pair_rate(const TargetVector& target, const Int& M, const SqrtVal& T_eff) {
    const std::size_t m = target.e.size();
    const Rat scale_sq = Rat(2 * static_cast<unsigned long>(m + 1)) / T_eff.sq;

    double rate = 1.0;
    // partner in range: each head coordinate independently
    for (std::size_t i = 0; i < m; ++i) {
        Int absa = abs(target.alpha[i]);
        if (absa >= M) return 0.0;
        rate *= to_double(Rat(M - absa) / Rat(M));
    }
    // labels agree: head coordinates gap e_i, last coordinate gap eta
    for (std::size_t i = 0; i < m; ++i)
        rate *= agree_probability(scale_sq * Rat(target.e[i] * target.e[i]));
    rate *= agree_probability(scale_sq * target.eta.sq);
    return rate;
}

double pairing_bound_instance(const TargetVector& target, const Int& M, const SqrtVal& T_eff) {
    const std::size_t m = target.e.size();
    const Rat scale_sq = Rat(2 * static_cast<unsigned long>(m + 1)) / T_eff.sq;
    double deficit = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        deficit += std::min(1.0, std::sqrt(to_double(scale_sq * Rat(target.e[i] * target.e[i]))));
    deficit += std::min(1.0, std::sqrt(to_double(scale_sq * target.eta.sq)));
    for (std::size_t i = 0; i < m; ++i)
        deficit += std::min(1.0, to_double(Rat(abs(target.alpha[i])) / Rat(M)));
    return std::max(0.0, 1.0 - deficit);
}

}  // namespace lwedcp
