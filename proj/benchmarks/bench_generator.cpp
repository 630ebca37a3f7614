#include <benchmark/benchmark.h>

#include <vector>

#include "ctmrng/histogram.hpp"
#include "ctmrng/sampler.hpp"
#include "ctmrng/tent_map.hpp"

namespace {

ctmrng::Generator make_generator(int p) {
    const auto cfg = ctmrng::CouplingConfig::linear(p, 1e-14);
    ctmrng::StateVector x0(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) x0[static_cast<std::size_t>(j)] = 0.33 + 0.01 * j;
    return ctmrng::Generator(cfg, x0, 0);
}

void BM_step(benchmark::State& state) {
    auto gen = make_generator(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        gen.step();
        benchmark::DoNotOptimize(gen.state()[0]);
    }
    // One "number" per component per step.
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_step)->Arg(2)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

void BM_threshold_select(benchmark::State& state) {
    auto gen = make_generator(4);
    const ctmrng::ThresholdRule rule{ctmrng::ThresholdSamplerConfig{}};
    std::uint64_t selected = 0;
    for (auto _ : state) {
        if (rule.select(gen.step())) ++selected;
    }
    benchmark::DoNotOptimize(selected);
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_threshold_select);

void BM_tally_1d(benchmark::State& state) {
    auto gen = make_generator(4);
    std::vector<double> values(1 << 16);
    for (auto& v : values) v = gen.step()[0];
    ctmrng::HistogramAccumulator1D acc{ctmrng::Partition1D(static_cast<std::uint64_t>(state.range(0)))};
    std::size_t i = 0;
    for (auto _ : state) {
        acc.tally(values[i]);
        i = (i + 1) & (values.size() - 1);
    }
    benchmark::DoNotOptimize(acc.total());
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_tally_1d)->Arg(100)->Arg(10'000)->Arg(1'000'000);

void BM_tally_2d(benchmark::State& state) {
    auto gen = make_generator(4);
    std::vector<double> values(1 << 16);
    for (auto& v : values) v = gen.step()[0];
    ctmrng::HistogramAccumulator2D acc{ctmrng::Partition2D(static_cast<std::uint64_t>(state.range(0)))};
    std::size_t i = 0;
    for (auto _ : state) {
        acc.tally(values[i], values[i + 1]);
        i = (i + 2) & (values.size() - 2);
    }
    benchmark::DoNotOptimize(acc.total());
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_tally_2d)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
