#include "lwedcp/rng.hpp"

#include <stdexcept>

namespace lwedcp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    // rejection from the largest multiple of bound
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % bound;
}

Int Rng::below(const Int& bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below: nonpositive bound");
    if (bound == 1) return Int(0);
    Int top = bound - 1;
    const std::size_t nbits = mpz_sizeinbase(top.get_mpz_t(), 2);
    const std::size_t words = (nbits + 63) / 64;
    const std::size_t top_bits = nbits - 64 * (words - 1);
    while (true) {
        Int x = 0;
        for (std::size_t i = 0; i < words; ++i) {
            std::uint64_t w = gen_();
            if (i + 1 == words && top_bits < 64) w &= (1ULL << top_bits) - 1;
            Int word(static_cast<unsigned long>(w));
            x |= word << static_cast<unsigned long>(64 * i);
        }
        if (x < bound) return x;
    }
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view label) {
    return splitmix64(splitmix64(root) ^ fnv1a64(label));
}

}  // namespace lwedcp
