// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <vector>

#include "boir/bayesopt.hpp"
#include "boir/gp.hpp"
#include "boir/hyperspace.hpp"
#include "boir/rng.hpp"

using namespace boir;

namespace {

struct GpData {
    std::vector<std::vector<double>> xs;
    std::vector<double> ys;
};

GpData synth_observations(std::size_t n) {
    Rng rng(4242);
    GpData data;
    data.xs.assign(n, std::vector<double>(kEncodedDim));
    data.ys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& v : data.xs[i]) v = rng.uniform();
        data.ys[i] = rng.uniform();
    }
    return data;
}

}  // namespace

static void GpFit(benchmark::State& state) {
    const auto data = synth_observations(static_cast<std::size_t>(state.range(0)));
    const auto params = default_kernel_params(data.ys);
    for (auto _ : state) {
        auto model = GpModel::fit(data.xs, data.ys, params);
        benchmark::DoNotOptimize(model);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(GpFit)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void GpPosterior(benchmark::State& state) {
    const auto data = synth_observations(static_cast<std::size_t>(state.range(0)));
    const auto model = GpModel::fit(data.xs, data.ys, default_kernel_params(data.ys));
    Rng rng(99);
    std::vector<double> x(kEncodedDim);
    for (auto& v : x) v = rng.uniform();
    for (auto _ : state) {
        auto post = model.posterior(x);
        benchmark::DoNotOptimize(post);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(GpPosterior)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void KernelGridSearch(benchmark::State& state) {
    const auto data = synth_observations(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto params = ml2_grid_search(data.xs, data.ys);
        benchmark::DoNotOptimize(params);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(KernelGridSearch)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void ProposeCandidate(benchmark::State& state) {
    const auto data = synth_observations(50);
    const auto model = GpModel::fit(data.xs, data.ys, default_kernel_params(data.ys));
    const SpaceDef space = SpaceDef::standard();
    Rng rng(7);
    for (auto _ : state) {
        auto point = propose_next<ConfigPoint>(
            model, [&](Rng& r) { return sample_random(space, r); },
            [&](const ConfigPoint& p) { return encode(space, p); }, 0.5,
            static_cast<std::size_t>(state.range(0)), rng);
        benchmark::DoNotOptimize(point);
    }
}
BENCHMARK(ProposeCandidate)->Arg(500)->Arg(2000)->ArgNames({"candidates"});
