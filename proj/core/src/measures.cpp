// SPDX-License-Identifier: Apache-2.0
#include "boir/measures.hpp"

#include <algorithm>
#include <cmath>

#include "boir/errors.hpp"

namespace boir {

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::AP: return "map";
        case Measure::NDCG: return "ndcg";
        case Measure::P10: return "p10";
    }
    return "";
}

std::optional<Measure> measure_from_name(std::string_view name) {
    if (name == "map" || name == "ap") return Measure::AP;
    if (name == "ndcg") return Measure::NDCG;
    if (name == "p10") return Measure::P10;
    return std::nullopt;
}

double TopicMeasures::get(Measure m) const {
    switch (m) {
        case Measure::AP: return ap;
        case Measure::NDCG: return ndcg;
        case Measure::P10: return p10;
    }
    return 0;
}

double MeasureReport::mean(Measure m) const {
    switch (m) {
        case Measure::AP: return map;
        case Measure::NDCG: return mean_ndcg;
        case Measure::P10: return mean_p10;
    }
    return 0;
}

double average_precision(const Ranking& ranking, const Qrels& qrels,
                         const std::string& topic) {
    const std::size_t r = qrels.relevant_count(topic);
    if (r == 0) throw NoRelevant(topic);
    double sum = 0;
    std::size_t hits = 0;
    for (std::size_t k = 0; k < ranking.entries.size(); ++k) {
        if (qrels.grade(topic, ranking.entries[k].docno) > 0) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(k + 1);
        }
    }
    return sum / static_cast<double>(r);
}

double ndcg(const Ranking& ranking, const Qrels& qrels, const std::string& topic) {
    if (qrels.relevant_count(topic) == 0) throw NoRelevant(topic);
    double dcg = 0;
    for (std::size_t k = 0; k < ranking.entries.size(); ++k) {
        const int g = qrels.grade(topic, ranking.entries[k].docno);
        if (g > 0) dcg += g / std::log2(static_cast<double>(k + 2));
    }
    std::vector<int> grades;
    for (const auto& [docno, g] : qrels.topics().at(topic))
        if (g > 0) grades.push_back(g);
    std::sort(grades.begin(), grades.end(), std::greater<>());
    double idcg = 0;
    for (std::size_t k = 0; k < grades.size(); ++k)
        idcg += grades[k] / std::log2(static_cast<double>(k + 2));
    return idcg > 0 ? dcg / idcg : 0;
}

double precision_at_k(const Ranking& ranking, const Qrels& qrels,
                      const std::string& topic, std::size_t k) {
    if (qrels.relevant_count(topic) == 0) throw NoRelevant(topic);
    std::size_t hits = 0;
    const std::size_t upto = std::min(k, ranking.entries.size());
    for (std::size_t i = 0; i < upto; ++i)
        if (qrels.grade(topic, ranking.entries[i].docno) > 0) ++hits;
    return static_cast<double>(hits) / static_cast<double>(k);
}

MeasureReport evaluate_run(const RunFile& run, const Qrels& qrels) {
    MeasureReport report;
    bool overlap = false;
    static const Ranking kEmpty;
    for (const auto& [topic, docs] : qrels.topics()) {
        if (qrels.relevant_count(topic) == 0) continue;
        auto it = run.rankings.find(topic);
        const Ranking* ranking = &kEmpty;
        if (it != run.rankings.end()) {
            ranking = &it->second;
            overlap = true;
        }
        TopicMeasures m;
        m.ap = average_precision(*ranking, qrels, topic);
        m.ndcg = ndcg(*ranking, qrels, topic);
        m.p10 = precision_at_k(*ranking, qrels, topic);
        report.per_topic.emplace(topic, m);
    }
    if (!overlap) throw NoOverlap();
    for (const auto& [topic, m] : report.per_topic) {
        report.map += m.ap;
        report.mean_ndcg += m.ndcg;
        report.mean_p10 += m.p10;
    }
    const auto n = static_cast<double>(report.per_topic.size());
    report.map /= n;
    report.mean_ndcg /= n;
    report.mean_p10 /= n;
    return report;
}

std::map<std::string, std::vector<double>, TopicOrder> per_topic_delta(
    const std::vector<const RunFile*>& runs, const RunFile& baseline,
    const Qrels& qrels, Measure measure) {
    MeasureReport base = evaluate_run(baseline, qrels);
    std::map<std::string, std::vector<double>, TopicOrder> table;
    for (const auto& [topic, m] : base.per_topic)
        table[topic] = std::vector<double>();
    for (const RunFile* run : runs) {
        MeasureReport r = evaluate_run(*run, qrels);
        for (auto& [topic, deltas] : table)
            deltas.push_back(r.per_topic.at(topic).get(measure) -
                             base.per_topic.at(topic).get(measure));
    }
    return table;
}

}  // namespace boir
