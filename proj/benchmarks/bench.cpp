#include <benchmark/benchmark.h>

#include "classnum/arith.hpp"
#include "classnum/corpus.hpp"
#include "classnum/galois_sim.hpp"

namespace {

void BM_FactorizeSemiprime(benchmark::State& state) {
    // ~2^60 semiprime: exercises the rho stage past the trial-division sieve.
    classnum::arith::Int n("1152921470247108007");
    for (auto _ : state) {
        auto f = classnum::arith::factorize(n);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_FactorizeSemiprime);

void BM_FeasibleAlphas(benchmark::State& state) {
    for (auto _ : state) {
        auto v = classnum::galois_sim::feasible_alphas(130, 1301);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_FeasibleAlphas);

void BM_CorpusReplay(benchmark::State& state) {
    auto entries = classnum::corpus::embedded_corpus();
    for (auto _ : state) {
        auto rep = classnum::corpus::replay(entries);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_CorpusReplay);

}  // namespace

BENCHMARK_MAIN();
