// SPDX-License-Identifier: Apache-2.0
#include "boir/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "boir/errors.hpp"

namespace boir {

std::string_view model_name(RetrievalModel m) {
    switch (m) {
        case RetrievalModel::TFIDF: return "TFIDF";
        case RetrievalModel::BM25: return "BM25";
        case RetrievalModel::LM_JM: return "LM_JM";
        case RetrievalModel::LM_DIR: return "LM_DIR";
        case RetrievalModel::LM_TS: return "LM_TS";
    }
    return "";
}

std::optional<RetrievalModel> model_from_name(std::string_view name) {
    if (name == "TFIDF") return RetrievalModel::TFIDF;
    if (name == "BM25") return RetrievalModel::BM25;
    if (name == "LM_JM") return RetrievalModel::LM_JM;
    if (name == "LM_DIR") return RetrievalModel::LM_DIR;
    if (name == "LM_TS") return RetrievalModel::LM_TS;
    return std::nullopt;
}

WeightedQuery WeightedQuery::from_tokens(const std::vector<std::string>& tokens) {
    WeightedQuery q;
    for (const auto& t : tokens) q.terms[t] += 1.0;
    return q;
}

double WeightedQuery::total_weight() const {
    double sum = 0;
    for (const auto& [t, w] : terms) sum += w;
    return sum;
}

WeightedQuery make_query(std::string_view text, IndexVariant variant,
                         const Stoplist& stoplist) {
    auto tokens = tokenize(text);
    if (variant.stopper) tokens = apply_stopper(std::move(tokens), stoplist);
    if (variant.stemmer) tokens = apply_stemmer(std::move(tokens));
    if (tokens.empty()) throw EmptyQuery();
    return WeightedQuery::from_tokens(tokens);
}

namespace {

std::uint32_t tf_in(const TermInfo* info, std::uint32_t doc) {
    if (!info) return 0;
    auto it = std::lower_bound(info->postings.begin(), info->postings.end(), doc,
                               [](const Posting& p, std::uint32_t d) { return p.doc < d; });
    if (it == info->postings.end() || it->doc != doc) return 0;
    return it->tf;
}

double floored_log(double p) { return std::log(std::max(p, kLogFloor)); }

}  // namespace

double score_tfidf(const InvertedIndex& index, const WeightedQuery& query,
                   std::uint32_t doc, double k1, double b) {
    const double n = static_cast<double>(index.doc_count());
    const double avdl = index.avdl();
    const double dl = index.doc_length(doc);
    double score = 0;
    for (const auto& [t, w] : query.terms) {
        const auto* info = index.term(t);
        const double tf = tf_in(info, doc);
        if (tf == 0) continue;
        const double df = static_cast<double>(info->df());
        const double tfn = k1 * tf / (tf + k1 * (1 - b + b * dl / avdl));
        const double idf = std::log((n + 1) / (df + 0.5));
        score += w * tfn * idf * idf;
    }
    return score;
}

double score_bm25(const InvertedIndex& index, const WeightedQuery& query,
                  std::uint32_t doc, double k1, double k3, double b) {
    const double n = static_cast<double>(index.doc_count());
    const double avdl = index.avdl();
    const double dl = index.doc_length(doc);
    double score = 0;
    for (const auto& [t, qtf] : query.terms) {
        const auto* info = index.term(t);
        const double tf = tf_in(info, doc);
        if (tf == 0) continue;
        const double df = static_cast<double>(info->df());
        const double idf = std::max(0.0, std::log((n - df + 0.5) / (df + 0.5)));
        const double tf_part = tf * (k1 + 1) / (tf + k1 * (1 - b + b * dl / avdl));
        const double qtf_part = qtf * (k3 + 1) / (k3 + qtf);
        score += idf * tf_part * qtf_part;
    }
    return score;
}

double score_lm_jm(const InvertedIndex& index, const WeightedQuery& query,
                   std::uint32_t doc, double lambda_doc, double lambda_col) {
    if (lambda_doc + lambda_col <= 0)
        throw DegenerateSmoothing("lambda_doc and lambda_col are both zero");
    const double a = lambda_doc / (lambda_doc + lambda_col);
    const double c = 1 - a;
    const double dl = index.doc_length(doc);
    double score = 0;
    for (const auto& [t, w] : query.terms) {
        const double ml = dl > 0 ? tf_in(index.term(t), doc) / dl : 0.0;
        score += w * floored_log(a * ml + c * index.collection_prob(t));
    }
    return score;
}

double score_lm_dir(const InvertedIndex& index, const WeightedQuery& query,
                    std::uint32_t doc, double mu) {
    const double dl = index.doc_length(doc);
    if (mu == 0 && dl == 0)
        throw DegenerateSmoothing("mu is zero on an empty document");
    double score = 0;
    for (const auto& [t, w] : query.terms) {
        const double tf = tf_in(index.term(t), doc);
        score += w * floored_log((tf + mu * index.collection_prob(t)) / (dl + mu));
    }
    return score;
}

double score_lm_ts(const InvertedIndex& index, const WeightedQuery& query,
                   std::uint32_t doc, double mu_ts, double lambda_ts) {
    const double dl = index.doc_length(doc);
    if (mu_ts == 0 && dl == 0)
        throw DegenerateSmoothing("mu_ts is zero on an empty document");
    double score = 0;
    for (const auto& [t, w] : query.terms) {
        const double tf = tf_in(index.term(t), doc);
        const double p = index.collection_prob(t);
        score += w * floored_log((1 - lambda_ts) * (tf + mu_ts * p) / (dl + mu_ts) +
                                 lambda_ts * p);
    }
    return score;
}

double score_doc(const InvertedIndex& index, const WeightedQuery& query,
                 std::uint32_t doc, const RetrievalConfig& config) {
    switch (config.model) {
        case RetrievalModel::TFIDF:
            return score_tfidf(index, query, doc, config.tfidf_k1, config.tfidf_b);
        case RetrievalModel::BM25:
            return score_bm25(index, query, doc, config.bm25_k1, config.bm25_k3,
                              config.bm25_b);
        case RetrievalModel::LM_JM:
            return score_lm_jm(index, query, doc, config.lambda_doc, config.lambda_col);
        case RetrievalModel::LM_DIR:
            return score_lm_dir(index, query, doc, config.mu_dir);
        case RetrievalModel::LM_TS:
            return score_lm_ts(index, query, doc, config.mu_ts, config.lambda_ts);
    }
    return 0;
}

WeightedQuery prf_expand(const InvertedIndex& index, const WeightedQuery& original,
                         const Ranking& first_pass, long fbDocs, long fbTerms,
                         double fbMu, double fbOrigWeight) {
    const std::size_t m =
        std::min<std::size_t>(static_cast<std::size_t>(std::max<long>(fbDocs, 0)),
                              first_pass.entries.size());
    const double qlen0 = original.total_weight();
    if (m == 0) {
        WeightedQuery norm;
        for (const auto& [t, w] : original.terms)
            if (w > 0) norm.terms[t] = w / qlen0;
        return norm;
    }

    // Softmax of first-pass scores over the top-m documents.
    std::vector<std::uint32_t> docs(m);
    std::vector<double> weights(m);
    double max_s = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i)
        max_s = std::max(max_s, first_pass.entries[i].score);
    double wsum = 0;
    for (std::size_t i = 0; i < m; ++i) {
        auto ord = index.ordinal_of(first_pass.entries[i].docno);
        if (!ord)
            throw InvalidPoint("first-pass docno not in index: " +
                               first_pass.entries[i].docno);
        docs[i] = *ord;
        weights[i] = std::exp(first_pass.entries[i].score - max_s);
        wsum += weights[i];
    }
    for (auto& w : weights) w /= wsum;

    // p(t|R) = alpha * p(t|C) + sum_d w_d * tf / (dl_d + fbMu), where alpha
    // collects the collection-smoothing mass of every feedback document.
    double alpha = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double denom = index.doc_length(docs[i]) + fbMu;
        if (denom > 0) alpha += weights[i] * fbMu / denom;
    }
    std::vector<std::pair<std::string, double>> scored;
    for (const auto& [t, info] : index.terms()) {
        double p = alpha * index.collection_prob(t);
        for (std::size_t i = 0; i < m; ++i) {
            const double denom = index.doc_length(docs[i]) + fbMu;
            if (denom > 0) p += weights[i] * tf_in(&info, docs[i]) / denom;
        }
        if (p > 0) scored.emplace_back(t, p);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (fbTerms >= 0 && scored.size() > static_cast<std::size_t>(fbTerms))
        scored.resize(static_cast<std::size_t>(fbTerms));
    double psum = 0;
    for (const auto& [t, p] : scored) psum += p;

    WeightedQuery expanded;
    for (const auto& [t, w] : original.terms) {
        const double v = fbOrigWeight * w / qlen0;
        if (v > 0) expanded.terms[t] += v;
    }
    if (psum > 0) {
        for (const auto& [t, p] : scored) {
            const double v = (1 - fbOrigWeight) * p / psum;
            if (v > 0) expanded.terms[t] += v;
        }
    }
    return expanded;
}

namespace {

Ranking rank_once(const InvertedIndex& index, const WeightedQuery& query,
                  const RetrievalConfig& config, std::size_t depth,
                  const std::string& topic) {
    std::set<std::uint32_t> candidates;
    for (const auto& [t, w] : query.terms) {
        const auto* info = index.term(t);
        if (!info) continue;
        for (const auto& p : info->postings) candidates.insert(p.doc);
    }
    Ranking r;
    r.topic = topic;
    r.depth = depth;
    r.entries.reserve(candidates.size());
    for (auto doc : candidates)
        r.entries.push_back({index.docno(doc), score_doc(index, query, doc, config)});
    std::sort(r.entries.begin(), r.entries.end(), [](const auto& a, const auto& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.docno < b.docno;
    });
    if (r.entries.size() > depth) r.entries.resize(depth);
    return r;
}

}  // namespace

Ranking rank(const InvertedIndex& index, const WeightedQuery& query,
             const RetrievalConfig& config, std::size_t depth, std::string topic) {
    if (index.doc_count() == 0) throw EmptyCollection();
    if (query.terms.empty()) throw EmptyQuery("query has no terms");

    Ranking first = rank_once(index, query, config, depth, topic);
    if (!config.prf || first.entries.empty()) return first;

    WeightedQuery expanded =
        prf_expand(index, query, first, config.fbDocs, config.fbTerms, config.fbMu,
                   config.fbOrigWeight);
    if (config.model == RetrievalModel::BM25) {
        // BM25 reads weights as query term frequencies; rescale the expanded
        // distribution back to the original query's magnitude.
        const double qlen = query.total_weight();
        for (auto& [t, w] : expanded.terms) w *= qlen;
    }
    return rank_once(index, expanded, config, depth, topic);
}

}  // namespace boir
