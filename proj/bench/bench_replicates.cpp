// Serial reference loop vs the OpenMP replicate loop on the same tasks.

#include <benchmark/benchmark.h>

#include "graphex/estimators.hpp"
#include "graphex/models.hpp"
#include "graphex/parallel.hpp"
#include "graphex/sampler.hpp"
#include "graphex/theory.hpp"

using namespace graphex;

namespace {

void sample_and_estimate(benchmark::State& state, Schedule schedule) {
    const auto model = make_model(ModelKind::Ggp, 0.5);
    const double size = static_cast<double>(state.range(0));
    std::uint64_t round = 0;
    for (auto _ : state) {
        auto task = [&](std::size_t i) {
            Rng rng = Rng::derive(round, 0, i, StreamTag::sample);
            return estimate_sigma_nsvr(sample_unipartite(model, size, kDefaultBudget, rng)).sigma_hat;
        };
        const auto out = run_replicates<double>(64, task, schedule);
        benchmark::DoNotOptimize(pairwise_sum(out));
        ++round;
    }
    state.SetItemsProcessed(state.iterations() * 64);
}

void quadrature_sweep(benchmark::State& state, Schedule schedule) {
    const auto model = make_model(ModelKind::SparseNonSeparable, 0.3);
    for (auto _ : state) {
        auto task = [&](std::size_t i) { return expected_N_p(model, 0.5, 10.0 * static_cast<double>(i + 1)); };
        benchmark::DoNotOptimize(run_replicates<double>(32, task, schedule));
    }
}

void BM_SampleSerial(benchmark::State& s) { sample_and_estimate(s, Schedule::Serial); }
void BM_SampleParallel(benchmark::State& s) { sample_and_estimate(s, Schedule::Parallel); }
void BM_QuadratureSerial(benchmark::State& s) { quadrature_sweep(s, Schedule::Serial); }
void BM_QuadratureParallel(benchmark::State& s) { quadrature_sweep(s, Schedule::Parallel); }

}  // namespace

BENCHMARK(BM_SampleSerial)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleParallel)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QuadratureSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QuadratureParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
