// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "boir/retrieval.hpp"
#include "boir/util.hpp"

namespace boir {

/// Graded relevance judgments. A document is relevant iff its grade > 0.
class Qrels {
public:
    using DocGrades = std::map<std::string, int>;

    void add(const std::string& topic, const std::string& docno, int grade);

    /// Grade of (topic, docno); 0 when unjudged.
    int grade(std::string_view topic, std::string_view docno) const;

    /// Count of relevant (grade > 0) documents for a topic.
    std::size_t relevant_count(std::string_view topic) const;

    const std::map<std::string, DocGrades, TopicOrder>& topics() const {
        return topics_;
    }

private:
    std::map<std::string, DocGrades, TopicOrder> topics_;
};

/// A named set of per-topic rankings (a TREC submission).
struct RunFile {
    std::string tag;
    std::map<std::string, Ranking, TopicOrder> rankings;
};

/// Lines of `topic 0 docno grade`. Duplicate (topic, docno) pairs and
/// negative grades are rejected.
Qrels parse_qrels(std::istream& in);
Qrels read_qrels(const std::filesystem::path& path);

/// Lines of `topic Q0 docno rank score tag`. Scores must not increase with
/// rank within a topic (MonotonicityError); rankings are canonically
/// re-sorted by (score desc, docno asc) after parsing.
RunFile parse_run(std::istream& in);
RunFile read_run(const std::filesystem::path& path);

/// Emits topics in ascending id order, ranks recomputed from entry order,
/// scores rendered with 6 significant digits.
void write_run(std::ostream& out, const RunFile& run);
void save_run(const std::filesystem::path& path, const RunFile& run);

}  // namespace boir
