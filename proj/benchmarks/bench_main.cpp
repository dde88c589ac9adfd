#include <benchmark/benchmark.h>

#include <vector>

#include "grainforge/boolfn.hpp"
#include "grainforge/engine.hpp"
#include "grainforge/funlib.hpp"
#include "grainforge/instances.hpp"

using namespace grainforge;

static void BM_walsh_transform(benchmark::State& state) {
    int n = int(state.range(0));
    TruthTable tt = anf_to_tt(build_function(n == 10 ? "h10" : "g24").anf);
    for (auto _ : state) {
        WalshSpectrum ws = walsh_spectrum(tt);
        benchmark::DoNotOptimize(ws.values.data());
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(tt.size()));
}
BENCHMARK(BM_walsh_transform)->Arg(10)->Arg(24);

static void BM_keystream(benchmark::State& state) {
    GrainParams p = get_instance(state.range(0) == 80 ? "r80" : "r256");
    std::vector<std::uint8_t> K(std::size_t(p.kappa), 0), IV(std::size_t(p.v), 0);
    K[0] = 1;
    const std::uint64_t nbits = 1 << 16;
    for (auto _ : state) {
        auto z = keystream(p, K, IV, nbits);
        benchmark::DoNotOptimize(z.data());
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(nbits));
}
BENCHMARK(BM_keystream)->Arg(80)->Arg(256);

static void BM_immunity_small(benchmark::State& state) {
    TruthTable tt = anf_to_tt(build_function("g10").anf);
    for (auto _ : state) {
        AiResult r = algebraic_immunity(tt);
        benchmark::DoNotOptimize(r.ai);
    }
}
BENCHMARK(BM_immunity_small);

BENCHMARK_MAIN();
