#include "lwedcp/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace lwedcp {

Int isqrt_floor(const Int& x) {
    if (x < 0) throw std::invalid_argument("isqrt_floor: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

int cmp_sqrt(const Rat& r, const Rat& c) {
    if (r < 0) throw std::invalid_argument("cmp_sqrt: negative radicand");
    if (c < 0) return (r == 0 && c == 0) ? 0 : 1;  // sqrt(r) >= 0 > c unless both 0
    // both sides nonnegative: compare squares
    Rat c2 = c * c;
    if (r < c2) return -1;
    if (r > c2) return 1;
    return 0;
}

int cmp_signed_sqrt(int s, const Rat& r, const Rat& c) {
    if (r < 0) throw std::invalid_argument("cmp_signed_sqrt: negative radicand");
    if (s == 0 || r == 0) {
        // value is exactly 0
        if (c > 0) return -1;
        if (c < 0) return 1;
        return 0;
    }
    if (s > 0) return cmp_sqrt(r, c);
    // value = -sqrt(r):  -sqrt(r) ? c  <=>  -(c) ? sqrt(r) flipped
    return -cmp_sqrt(r, -c);
}

Int floor_sqrt_sub(int s, const Rat& r, const Rat& w) {
    if (r < 0) throw std::invalid_argument("floor_sqrt_sub: negative radicand");
    if (s == 0 || r == 0) return floor_rat(-w);

    // sqrt(N/D) = sqrt(N*D)/D; a = floor(sqrt(N*D)) brackets it within 1/D.
    const Int N(mpq_numref(r.get_mpq_t()));
    const Int D(mpq_denref(r.get_mpq_t()));
    Int a = isqrt_floor(N * D);

    Rat lower;  // a rational lower bound for s*sqrt(r)
    if (s > 0) {
        lower = make_rat(a, D);
    } else {
        lower = make_rat(-(a + 1), D);
    }
    Int k = floor_rat(lower - w);
    // tighten: the true floor is at most 2 above the lower-bound estimate
    while (cmp_signed_sqrt(s, r, Rat(k + 1) + w) >= 0) ++k;
    return k;
}

double SqrtVal::approx() const { return std::sqrt(to_double(sq)); }

SqrtVal SqrtVal::from_square(const Rat& square) {
    if (square < 0) throw std::invalid_argument("SqrtVal: negative square");
    return SqrtVal{square};
}

SqrtVal SqrtVal::from_rational(const Rat& value) {
    if (value < 0) throw std::invalid_argument("SqrtVal: negative value");
    return SqrtVal{value * value};
}

}  // namespace lwedcp
