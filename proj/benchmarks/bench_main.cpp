// Timings of the hot paths: node polynomial evaluation, Lebesgue sup and
// integral, trig root finding and the weighted residue area sum.
#include <benchmark/benchmark.h>

#include <complex>

#include "interplab/complexint.hpp"
#include "interplab/lagrange.hpp"
#include "interplab/nodes.hpp"
#include "interplab/trig.hpp"

namespace {

using namespace interplab;

void BM_EvalP(benchmark::State& state) {
    const NodeSet nodes = chebyshev_nodes(static_cast<std::size_t>(state.range(0)));
    double x = 0.1234;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_P(nodes, {x, 0.01}));
        x += 1e-9;
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalP)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_LebesguePoint(benchmark::State& state) {
    const LagrangeBasis basis(chebyshev_nodes(static_cast<std::size_t>(state.range(0))));
    double x = 0.1234;
    for (auto _ : state) {
        benchmark::DoNotOptimize(basis.lebesgue(x));
        x += 1e-9;
    }
}
BENCHMARK(BM_LebesguePoint)->RangeMultiplier(4)->Range(64, 4096);

void BM_LebesgueSup(benchmark::State& state) {
    const LagrangeBasis basis(chebyshev_nodes(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(lebesgue_sup(basis, {-1.0, 1.0}, 16).sup_value);
}
BENCHMARK(BM_LebesgueSup)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_LebesgueIntegral(benchmark::State& state) {
    const LagrangeBasis basis(chebyshev_nodes(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(lebesgue_integral(basis, {-1.0, 1.0}).integral_value);
}
BENCHMARK(BM_LebesgueIntegral)->Arg(100)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_TrigRoots(benchmark::State& state) {
    const TrigPoly p = random_real_rooted(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(trig_roots(p, true).roots.size());
}
BENCHMARK(BM_TrigRoots)->Arg(5)->Arg(10)->Arg(24);

void BM_WeightedResidue(benchmark::State& state) {
    const RationalFn f({0.0, std::complex<double>{0.5, 0.0}}, {1.0, 2.0});
    const ComplexFn w = [](std::complex<double> z) { return std::norm(z); };
    const Box box{{-1.0, -1.0}, {1.0, 1.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(weighted_residue_check(f, w, box, 64, static_cast<std::size_t>(state.range(0))).residual);
    }
}
BENCHMARK(BM_WeightedResidue)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
