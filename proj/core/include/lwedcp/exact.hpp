#pragma once

// Exact arithmetic on values of the form s*sqrt(r) with r a nonnegative
// rational and s a sign. Floors and comparisons against rationals are decided
// by integer arithmetic only, so results never depend on floating-point
// rounding. This is what keeps cell labels and enumeration bounds exact even
// when the scale factors (lattice gaps, eta) are irrational.

#include "lwedcp/bigint.hpp"

namespace lwedcp {

// floor(sqrt(x)) for integer x >= 0.
Int isqrt_floor(const Int& x);

// Compares sqrt(r) with the rational c; r >= 0. Returns -1, 0, +1.
int cmp_sqrt(const Rat& r, const Rat& c);

// Compares s*sqrt(r) with c; s in {-1, 0, +1}, r >= 0.
int cmp_signed_sqrt(int s, const Rat& r, const Rat& c);

// floor(s*sqrt(r) - w), exact.
Int floor_sqrt_sub(int s, const Rat& r, const Rat& w);

// A nonnegative real carried as its exact square. Used for eta, lambda_1 and
// the oracle scale T, all of which are square roots of rationals.
struct SqrtVal {
    Rat sq;  // the exact square, >= 0

    double approx() const;

    static SqrtVal from_square(const Rat& square);
    static SqrtVal from_rational(const Rat& value);  // value >= 0, stores value^2
};

}  // namespace lwedcp
