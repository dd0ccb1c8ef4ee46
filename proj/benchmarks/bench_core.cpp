#include <benchmark/benchmark.h>

#include "rhoslice/covers.hpp"
#include "rhoslice/hermitian.hpp"

using namespace rhoslice;

namespace {

AlexanderPresentation trefoil() {
    LaurentPoly p;
    p.set_coeff(0, Int(1));
    p.set_coeff(1, Int(-1));
    p.set_coeff(2, Int(1));
    return AlexanderPresentation{1, {p}};
}

void BM_CyclotomicResultant(benchmark::State& state) {
    const LaurentPoly phi = cyclotomic_poly(static_cast<unsigned long>(state.range(0)));
    const LaurentPoly tr = LaurentPoly::monomial(9, Int(1)) - LaurentPoly::one();
    for (auto _ : state) {
        benchmark::DoNotOptimize(resultant(phi, tr));
    }
}
BENCHMARK(BM_CyclotomicResultant)->Unit(benchmark::kMicrosecond)->Arg(30)->Arg(105);

void BM_FoxOrder(benchmark::State& state) {
    const AlexanderPresentation a = trefoil();
    const unsigned long r = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fox_order(a, r));
    }
}
BENCHMARK(BM_FoxOrder)->Unit(benchmark::kMicrosecond)->RangeMultiplier(2)->Range(2, 16);

void BM_BlockCirculantOrder(benchmark::State& state) {
    const AlexanderPresentation a = trefoil();
    const unsigned long r = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(block_circulant_order(a, r));
    }
}
BENCHMARK(BM_BlockCirculantOrder)->Unit(benchmark::kMicrosecond)->RangeMultiplier(2)->Range(2, 64);

void BM_RhoFinite(benchmark::State& state) {
    const HermMatrix u = model_matrix();
    const unsigned long k = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho_finite(u, k));
    }
}
BENCHMARK(BM_RhoFinite)->Unit(benchmark::kMillisecond)->Arg(12)->Arg(24)->Arg(48);

void BM_SignatureFunction(benchmark::State& state) {
    const HermMatrix u = model_matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(signature_function(u));
    }
}
BENCHMARK(BM_SignatureFunction)->Unit(benchmark::kMillisecond);

void BM_RhoIntegralExact(benchmark::State& state) {
    const HermMatrix u = model_matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho_integral(u));
    }
}
BENCHMARK(BM_RhoIntegralExact)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
