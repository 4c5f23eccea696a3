#include "octalg/identities.hpp"
#include "octalg/random.hpp"
#include "octalg/super_affine.hpp"
#include "octalg/three_algebra.hpp"

#include <benchmark/benchmark.h>

using namespace octalg;

namespace {

AlgebraKind kind_arg(const benchmark::State &s) {
    return s.range(0) == 0 ? AlgebraKind::Octonion : AlgebraKind::SplitOctonion;
}

void BM_Multiply(benchmark::State &state) {
    const auto k = kind_arg(state);
    ElementSampler rng(1);
    const Element a = rng.element();
    const Element b = rng.element();
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiply(k, a, b));
    }
}
BENCHMARK(BM_Multiply)->Arg(0)->Arg(1);

void BM_MalcevRandom(benchmark::State &state) {
    const auto k = kind_arg(state);
    ElementSampler rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(malcev_check(k, rng.element(), rng.element(), rng.element()));
    }
}
BENCHMARK(BM_MalcevRandom)->Arg(0)->Arg(1);

void BM_Identity(benchmark::State &state) {
    const auto &t = structure_tensors(kind_arg(state));
    const auto id = static_cast<IdentityId>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(identity_residuals(t, id, Reading::Printed));
    }
}
BENCHMARK(BM_Identity)->ArgsProduct({{0, 1}, {3, 11, 17, 18}})->Unit(benchmark::kMillisecond);

void BM_FundamentalIdentitySweep(benchmark::State &state) {
    const auto k = kind_arg(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_fundamental_identity(k));
    }
}
BENCHMARK(BM_FundamentalIdentitySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_LeibnizSweep(benchmark::State &state) {
    const auto k = kind_arg(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_leibniz(k));
    }
}
BENCHMARK(BM_LeibnizSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExtractF(benchmark::State &state) {
    const auto k = kind_arg(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_f(k));
    }
}
BENCHMARK(BM_ExtractF)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SuperMalcev(benchmark::State &state) {
    const auto k = kind_arg(state);
    const int bound = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(super_malcev_check(k, BracketConvention{}, bound));
    }
}
BENCHMARK(BM_SuperMalcev)->ArgsProduct({{0, 1}, {1, 2}})->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
