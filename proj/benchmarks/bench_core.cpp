#include <benchmark/benchmark.h>

#include "lwedcp/dcpmap.hpp"
#include "lwedcp/verify.hpp"

using namespace lwedcp;

namespace {

LweInstance desk_instance(int m, const char* q, std::uint64_t seed) {
    ReductionParams p = derive_params(2, {{"q", q}, {"m", std::to_string(m)}, {"M", "16"}});
    return gen_lwe_instance(p, seed);
}

}  // namespace

static void bm_qary_plus_lll(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    LweInstance inst = desk_instance(m, "97", 11);
    for (auto _ : state) {
        Basis b = lll_reduce(qary_basis(inst.A, inst.q));
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(bm_qary_plus_lll)->Arg(4)->Arg(6)->Arg(8);

static void bm_lambda1_enumeration(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    LweInstance inst = desk_instance(m, "97", 11);
    Basis b = lll_reduce(qary_basis(inst.A, inst.q));
    for (auto _ : state) {
        SvpResult r = lambda1_bruteforce(b);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_lambda1_enumeration)->Arg(4)->Arg(6)->Arg(8);

static void bm_oracle_label(benchmark::State& state) {
    ReductionParams p = derive_params(2, {{"q", "97"}, {"m", "5"}, {"M", "16"}});
    PreparedInstance prep = prepare_instance(p, 11);
    CellOffsets w = CellOffsets::draw(6, 3);
    IntVec a(6, Int(7));
    for (auto _ : state) {
        CellLabel l = oracle_F(1, a, prep.eb, w, prep.T_eff, p.M);
        benchmark::DoNotOptimize(l);
    }
}
BENCHMARK(bm_oracle_label);

static void bm_simulate_register(benchmark::State& state) {
    ReductionParams p = derive_params(2, {{"q", "97"}, {"m", "5"}, {"M", "16"}});
    PreparedInstance prep = prepare_instance(p, 11);
    Rng rng(5);
    for (auto _ : state) {
        TwoPointRecord rec = simulate_register(prep.eb, prep.target, p, prep.T_eff, rng.u64(), rng);
        benchmark::DoNotOptimize(rec);
    }
}
BENCHMARK(bm_simulate_register);

static void bm_pack_unpack_wide(benchmark::State& state) {
    Rng rng(9);
    Int R = pow_int(Int(2), 64) + 13;
    IntVec digits(64);
    for (auto& d : digits) d = rng.below(R);
    for (auto _ : state) {
        IntVec back = unpack_g(pack_g(digits, R), R, 64);
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(bm_pack_unpack_wide);

static void bm_discrete_gaussian(benchmark::State& state) {
    Rng rng(1);
    for (auto _ : state) {
        auto v = sample_discrete_gaussian(1000, 10.0, rng);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_discrete_gaussian);

BENCHMARK_MAIN();
