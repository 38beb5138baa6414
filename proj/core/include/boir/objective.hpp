// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "boir/hyperspace.hpp"
#include "boir/index.hpp"
#include "boir/measures.hpp"
#include "boir/topics.hpp"
#include "boir/trec_io.hpp"

namespace boir {

/// All four preprocessing variants of one corpus plus the stoplist used to
/// build them. Built eagerly so any configuration can be scored without
/// re-indexing.
struct IndexSet {
    std::array<InvertedIndex, 4> variants;  // [stopper * 2 + stemmer]
    Stoplist stoplist;

    const InvertedIndex& get(IndexVariant v) const {
        return variants[(v.stopper ? 2 : 0) + (v.stemmer ? 1 : 0)];
    }

    static IndexSet build(const std::vector<Document>& corpus, Stoplist stoplist);

    /// Expects the four variant directories plus stoplist.txt under root.
    static IndexSet load(const std::filesystem::path& root);

    /// Writes one directory per variant plus stoplist.txt.
    void save(const std::filesystem::path& root) const;
};

/// Ranks every topic and collects the results into a run. Topics whose query
/// text leaves no token after preprocessing are skipped (they simply retrieve
/// nothing). Queries come from the title field, or the description when
/// use_desc is set and one exists.
RunFile make_run(const InvertedIndex& index, const Stoplist& stoplist,
                 const std::vector<Topic>& topics, const RetrievalConfig& config,
                 std::size_t depth, const std::string& tag, bool use_desc = false);

/// The optimization objective: mean average precision of `point` on the
/// given topics and judgments. A configuration that retrieves nothing for
/// any evaluable topic scores 0.
double objective_map(const IndexSet& indexes, const std::vector<Topic>& topics,
                     const Qrels& qrels, const ConfigPoint& point,
                     std::size_t depth, bool use_desc = false);

/// One optimization evaluation as persisted to the history file.
struct HistoryRecord {
    std::size_t iteration = 0;  // 1-based
    ConfigPoint point;
    double y = 0;
    double best = 0;
};

/// TSV line: iteration, comma-joined key=value configuration, objective
/// value, incumbent best. Values round-trip exactly.
void append_history(std::ostream& out, const HistoryRecord& record);

/// Rejects gaps in the iteration sequence and incumbent values that
/// disagree with the running maximum.
std::vector<HistoryRecord> load_history(std::istream& in);

}  // namespace boir
