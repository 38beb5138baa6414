// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boir/trec_io.hpp"

namespace boir {

enum class Measure { AP, NDCG, P10 };

std::string_view measure_name(Measure m);
std::optional<Measure> measure_from_name(std::string_view name);

/// (1/R) * sum over relevant ranks k of precision@k, over the ranking as
/// given; unjudged documents count as non-relevant. Throws NoRelevant when
/// the topic has no relevant document.
double average_precision(const Ranking& ranking, const Qrels& qrels,
                         const std::string& topic);

/// DCG with linear gains and log2(k+1) discount, normalized by the ideal DCG
/// over all judged documents sorted by grade.
double ndcg(const Ranking& ranking, const Qrels& qrels, const std::string& topic);

/// Relevant documents among the first min(k, length) positions, divided by k.
double precision_at_k(const Ranking& ranking, const Qrels& qrels,
                      const std::string& topic, std::size_t k = 10);

struct TopicMeasures {
    double ap = 0;
    double ndcg = 0;
    double p10 = 0;

    double get(Measure m) const;
};

struct MeasureReport {
    /// One entry per evaluable topic (>= 1 relevant doc in the qrels); topics
    /// missing from the run score 0.
    std::map<std::string, TopicMeasures, TopicOrder> per_topic;
    double map = 0;
    double mean_ndcg = 0;
    double mean_p10 = 0;

    double mean(Measure m) const;
};

/// Evaluates every qrels topic with at least one relevant document. Throws
/// NoOverlap when the run shares no such topic with the qrels.
MeasureReport evaluate_run(const RunFile& run, const Qrels& qrels);

/// Rows keyed by topic; column j holds measure(runs[j]) - measure(baseline)
/// for that topic.
std::map<std::string, std::vector<double>, TopicOrder> per_topic_delta(
    const std::vector<const RunFile*>& runs, const RunFile& baseline,
    const Qrels& qrels, Measure measure);

}  // namespace boir
