#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "lwedcp/bigint.hpp"

namespace lwedcp {

// Deterministic random source. All randomness in the project flows through
// this wrapper; std::random distributions are avoided because their output
// is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t u64() { return gen_(); }

    // uniform in [0, bound), bound > 0
    std::uint64_t below(std::uint64_t bound);

    // uniform in [0, bound), bound > 0, arbitrary precision
    Int below(const Int& bound);

    // uniform dyadic in [0,1) with 53 bits
    double unit53() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // raw 53-bit numerator of a dyadic offset in [0,1)
    std::uint64_t bits53() { return gen_() >> 11; }

    bool coin() { return (gen_() & 1) != 0; }

private:
    std::mt19937_64 gen_;
};

// Stage seeds are derived from the run seed and a label, so every stage is
// independently reproducible from (seed, stage name).
std::uint64_t derive_seed(std::uint64_t root, std::string_view label);

}  // namespace lwedcp
