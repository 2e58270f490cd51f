#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lwedcp {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row vectors unless stated otherwise
using RatVec = std::vector<Rat>;

Int pow_int(const Int& base, unsigned long exponent);

// Canonicalized rational n/d (d != 0).
Rat make_rat(const Int& num, const Int& den);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);
// Nearest integer, ties round toward +infinity.
Int round_rat(const Rat& x);

bool is_probable_prime(const Int& n);

double to_double(const Int& x);
double to_double(const Rat& x);

std::string to_dec(const Int& x);
Int int_from_dec(const std::string& s);

Int dot(const IntVec& a, const IntVec& b);
Int norm_sq(const IntVec& a);
Rat dot(const RatVec& a, const RatVec& b);
Rat norm_sq(const RatVec& a);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);

// Nonnegative residue in [0, q).
Int mod_pos(const Int& a, const Int& q);
// Balanced residue in (-q/2, q/2].
Int mod_balanced(const Int& a, const Int& q);

std::uint64_t fnv1a64(std::string_view s);

}  // namespace lwedcp
