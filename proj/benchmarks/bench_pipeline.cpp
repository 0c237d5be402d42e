#include "qaff/construction.hpp"
#include "qaff/rl_system.hpp"
#include "qaff/subspace.hpp"

#include <benchmark/benchmark.h>

namespace {

qaff::RLSystem evaluation_system(unsigned d) {
    return qaff::gen_evaluation(d, qaff::Rational(1), qaff::QParam{qaff::Rational(2)});
}

void BM_ConstructEvaluation(benchmark::State& state) {
    const auto sys = evaluation_system(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        auto c = qaff::construct_module(sys, qaff::CheckLevel::fast);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ConstructEvaluation)->DenseRange(2, 10, 2);

void BM_Validate(benchmark::State& state) {
    const auto sys = evaluation_system(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        auto report = qaff::validate(sys);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Validate)->DenseRange(2, 10, 2);

void BM_Kernel(benchmark::State& state) {
    const auto d = static_cast<unsigned>(state.range(0));
    const qaff::Matrix r = evaluation_system(d).r();
    const qaff::Matrix power = r.pow(d / 2 + 1);
    for (auto _ : state) {
        auto k = qaff::kernel(power);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_Kernel)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
