#include "lwedcp/bigint.hpp"

#include <stdexcept>

namespace lwedcp {

Int pow_int(const Int& base, unsigned long exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int floor_rat(const Rat& x) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
    return r;
}

Int ceil_rat(const Rat& x) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
    return r;
}

Int round_rat(const Rat& x) {
    Rat shifted = x + Rat(1, 2);
    return floor_rat(shifted);
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

double to_double(const Int& x) { return x.get_d(); }
double to_double(const Rat& x) { return x.get_d(); }

std::string to_dec(const Int& x) { return x.get_str(10); }

Int int_from_dec(const std::string& s) {
    Int r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad decimal integer: " + s);
    return r;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Int norm_sq(const IntVec& a) { return dot(a, a); }

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Rat norm_sq(const RatVec& a) { return dot(a, a); }

IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Int mod_pos(const Int& a, const Int& q) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    return r;
}

Int mod_balanced(const Int& a, const Int& q) {
    Int r = mod_pos(a, q);
    if (2 * r > q) r -= q;
    return r;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace lwedcp
