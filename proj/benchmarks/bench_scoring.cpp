// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "boir/corpus.hpp"
#include "boir/index.hpp"
#include "boir/retrieval.hpp"
#include "boir/rng.hpp"
#include "boir/text.hpp"

using namespace boir;

namespace {

const InvertedIndex& bench_index() {
    static const InvertedIndex index = [] {
        Rng rng(777);
        std::vector<Document> corpus;
        for (std::size_t d = 0; d < 2000; ++d) {
            const std::size_t len = 50 + rng.below(250);
            std::string text;
            for (std::size_t k = 0; k < len; ++k) {
                const auto id =
                    static_cast<std::uint64_t>(1000 * rng.uniform() * rng.uniform());
                if (!text.empty()) text += ' ';
                text += "w" + std::to_string(id);
            }
            corpus.push_back({"d" + std::to_string(d), std::move(text)});
        }
        return build_index(corpus, IndexVariant{false, false}, Stoplist());
    }();
    return index;
}

WeightedQuery bench_query() {
    // Frequent terms so the postings unions stay large.
    return WeightedQuery::from_tokens({"w1", "w3", "w9", "w27"});
}

}  // namespace

static void RankTopDocs(benchmark::State& state) {
    const auto& index = bench_index();
    const auto query = bench_query();
    RetrievalConfig cfg;
    cfg.model = static_cast<RetrievalModel>(state.range(0));
    for (auto _ : state) {
        auto ranking = rank(index, query, cfg, 1000);
        benchmark::DoNotOptimize(ranking);
    }
}
BENCHMARK(RankTopDocs)->DenseRange(0, 4)->ArgNames({"model"});

static void RankWithFeedback(benchmark::State& state) {
    const auto& index = bench_index();
    const auto query = bench_query();
    RetrievalConfig cfg;
    cfg.prf = true;
    cfg.fbDocs = state.range(0);
    for (auto _ : state) {
        auto ranking = rank(index, query, cfg, 1000);
        benchmark::DoNotOptimize(ranking);
    }
}
BENCHMARK(RankWithFeedback)->Arg(5)->Arg(25)->Arg(50)->ArgNames({"fbDocs"});

static void ScoreSingleDocument(benchmark::State& state) {
    const auto& index = bench_index();
    const auto query = bench_query();
    RetrievalConfig cfg;
    cfg.model = static_cast<RetrievalModel>(state.range(0));
    for (auto _ : state) {
        const double score = score_doc(index, query, 0, cfg);
        benchmark::DoNotOptimize(score);
    }
}
BENCHMARK(ScoreSingleDocument)->DenseRange(0, 4)->ArgNames({"model"});
