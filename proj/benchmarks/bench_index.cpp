// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>
#include <vector>

#include "boir/corpus.hpp"
#include "boir/index.hpp"
#include "boir/rng.hpp"
#include "boir/text.hpp"

using namespace boir;

namespace {

/// Synthetic corpus with a skewed term distribution (2000-word vocabulary).
std::vector<Document> synth_corpus(std::size_t n_docs) {
    Rng rng(1234);
    std::vector<Document> corpus;
    corpus.reserve(n_docs);
    for (std::size_t d = 0; d < n_docs; ++d) {
        const std::size_t len = 50 + rng.below(250);
        std::string text;
        for (std::size_t k = 0; k < len; ++k) {
            const auto id = static_cast<std::uint64_t>(2000 * rng.uniform() * rng.uniform());
            if (!text.empty()) text += ' ';
            text += "w" + std::to_string(id);
        }
        corpus.push_back({"d" + std::to_string(d), std::move(text)});
    }
    return corpus;
}

}  // namespace

static void BuildIndexPlain(benchmark::State& state) {
    const auto corpus = synth_corpus(static_cast<std::size_t>(state.range(0)));
    const Stoplist stoplist = Stoplist::bundled();
    for (auto _ : state) {
        auto index = build_index(corpus, IndexVariant{false, false}, stoplist);
        benchmark::DoNotOptimize(index);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BuildIndexPlain)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

static void BuildIndexStopStem(benchmark::State& state) {
    const auto corpus = synth_corpus(static_cast<std::size_t>(state.range(0)));
    const Stoplist stoplist = Stoplist::bundled();
    for (auto _ : state) {
        auto index = build_index(corpus, IndexVariant{true, true}, stoplist);
        benchmark::DoNotOptimize(index);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BuildIndexStopStem)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

static void SaveLoadIndex(benchmark::State& state) {
    const auto corpus = synth_corpus(static_cast<std::size_t>(state.range(0)));
    const auto index = build_index(corpus, IndexVariant{false, false}, Stoplist());
    const auto dir = std::filesystem::temp_directory_path() / "boir_bench_index";
    for (auto _ : state) {
        index.save(dir);
        auto loaded = InvertedIndex::load(dir);
        benchmark::DoNotOptimize(loaded);
    }
    std::filesystem::remove_all(dir);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SaveLoadIndex)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

BENCHMARK_MAIN();
