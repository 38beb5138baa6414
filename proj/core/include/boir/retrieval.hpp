// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boir/index.hpp"

namespace boir {

enum class RetrievalModel { TFIDF, BM25, LM_JM, LM_DIR, LM_TS };

std::string_view model_name(RetrievalModel m);
std::optional<RetrievalModel> model_from_name(std::string_view name);

/// Probabilities inside logarithms are clamped at this floor so that
/// zero-probability events keep every score finite.
inline constexpr double kLogFloor = 1e-12;

/// One full scoring configuration. Only the fields gated by `model` (and
/// `prf`) are read during scoring.
struct RetrievalConfig {
    RetrievalModel model = RetrievalModel::LM_DIR;
    double tfidf_k1 = 1.5;
    double tfidf_b = 0.5;
    double bm25_k1 = 5.5;
    double bm25_k3 = 5.5;
    double bm25_b = 0.5;
    double lambda_doc = 0.5;
    double lambda_col = 0.5;
    double mu_dir = 1000.0;
    double mu_ts = 1500.0;
    double lambda_ts = 0.5;
    bool prf = false;
    long fbDocs = 10;
    long fbTerms = 10;
    double fbMu = 0.0;
    double fbOrigWeight = 0.5;
};

/// Query as a term -> weight map. Raw queries carry term counts (qtf);
/// feedback-expanded queries carry real weights summing to 1.
struct WeightedQuery {
    std::map<std::string, double, std::less<>> terms;

    static WeightedQuery from_tokens(const std::vector<std::string>& tokens);

    /// Sum of weights (the raw query length for qtf queries).
    double total_weight() const;
};

/// Preprocesses query text with the index variant's pipeline. Throws
/// EmptyQuery when no token survives.
WeightedQuery make_query(std::string_view text, IndexVariant variant,
                         const Stoplist& stoplist);

struct ScoredDoc {
    std::string docno;
    double score;
};

struct Ranking {
    std::string topic;
    std::vector<ScoredDoc> entries;  // score desc, ties by ascending docno
    std::size_t depth = 0;           // maximum entry count requested
};

double score_tfidf(const InvertedIndex& index, const WeightedQuery& query,
                   std::uint32_t doc, double k1, double b);
double score_bm25(const InvertedIndex& index, const WeightedQuery& query,
                  std::uint32_t doc, double k1, double k3, double b);
double score_lm_jm(const InvertedIndex& index, const WeightedQuery& query,
                   std::uint32_t doc, double lambda_doc, double lambda_col);
double score_lm_dir(const InvertedIndex& index, const WeightedQuery& query,
                    std::uint32_t doc, double mu);
double score_lm_ts(const InvertedIndex& index, const WeightedQuery& query,
                   std::uint32_t doc, double mu_ts, double lambda_ts);

/// Dispatches to the configured model's scorer.
double score_doc(const InvertedIndex& index, const WeightedQuery& query,
                 std::uint32_t doc, const RetrievalConfig& config);

/// Relevance-model expansion over the top fbDocs of a first-pass ranking.
/// Document weights are a softmax of the first-pass scores; term probabilities
/// smooth each document's distribution with fbMu collection mass; the fbTerms
/// best terms are kept (ties by ascending term) and mixed with the normalized
/// original query at fbOrigWeight.
WeightedQuery prf_expand(const InvertedIndex& index, const WeightedQuery& original,
                         const Ranking& first_pass, long fbDocs, long fbTerms,
                         double fbMu, double fbOrigWeight);

/// Scores every document containing at least one query term, sorts by
/// (score desc, docno asc) and truncates to depth. With config.prf the raw
/// query ranking feeds prf_expand and the expanded query is re-ranked.
Ranking rank(const InvertedIndex& index, const WeightedQuery& query,
             const RetrievalConfig& config, std::size_t depth,
             std::string topic = "");

}  // namespace boir
