// SPDX-License-Identifier: Apache-2.0
#include "boir/trec_io.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "boir/errors.hpp"

namespace boir {

void Qrels::add(const std::string& topic, const std::string& docno, int grade) {
    topics_[topic][docno] = grade;
}

int Qrels::grade(std::string_view topic, std::string_view docno) const {
    auto t = topics_.find(std::string(topic));
    if (t == topics_.end()) return 0;
    auto d = t->second.find(std::string(docno));
    return d == t->second.end() ? 0 : d->second;
}

std::size_t Qrels::relevant_count(std::string_view topic) const {
    auto t = topics_.find(std::string(topic));
    if (t == topics_.end()) return 0;
    std::size_t n = 0;
    for (const auto& [d, g] : t->second)
        if (g > 0) ++n;
    return n;
}

Qrels parse_qrels(std::istream& in) {
    Qrels qrels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto s = trim(line);
        if (s.empty()) continue;
        auto fields = split_ws(s);
        if (fields.size() != 4)
            throw ParseError(line_no, "expected 4 fields (topic 0 docno grade), got " +
                                          std::to_string(fields.size()));
        long grade;
        if (!parse_long(fields[3], grade))
            throw ParseError(line_no, "bad relevance grade: " + std::string(fields[3]));
        if (grade < 0)
            throw ParseError(line_no, "negative relevance grade");
        std::string topic(fields[0]), docno(fields[2]);
        auto& docs = qrels.topics();
        auto t = docs.find(topic);
        if (t != docs.end() && t->second.count(docno))
            throw ParseError(line_no, "duplicate judgment for (" + topic + ", " + docno + ")");
        qrels.add(topic, docno, static_cast<int>(grade));
    }
    return qrels;
}

Qrels read_qrels(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open qrels: " + path.string());
    return parse_qrels(in);
}

RunFile parse_run(std::istream& in) {
    RunFile run;
    std::map<std::string, double, TopicOrder> last_score;
    std::map<std::string, long, TopicOrder> last_rank;
    std::map<std::string, std::unordered_set<std::string>, TopicOrder> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto s = trim(line);
        if (s.empty()) continue;
        auto fields = split_ws(s);
        if (fields.size() != 6)
            throw ParseError(line_no,
                             "expected 6 fields (topic Q0 docno rank score tag), got " +
                                 std::to_string(fields.size()));
        if (fields[1] != "Q0")
            throw ParseError(line_no, "second field must be Q0");
        long rank_field;
        if (!parse_long(fields[3], rank_field) || rank_field < 1)
            throw ParseError(line_no, "bad rank: " + std::string(fields[3]));
        double score;
        if (!parse_double(fields[4], score))
            throw ParseError(line_no, "bad score: " + std::string(fields[4]));

        std::string topic(fields[0]), docno(fields[2]), tag(fields[5]);
        if (run.tag.empty())
            run.tag = tag;
        else if (run.tag != tag)
            throw ParseError(line_no, "inconsistent run tag: " + tag + " vs " + run.tag);
        if (!seen[topic].insert(docno).second)
            throw ParseError(line_no, "duplicate docno " + docno + " in topic " + topic);

        auto prev_rank = last_rank.find(topic);
        if (prev_rank != last_rank.end() && rank_field <= prev_rank->second)
            throw ParseError(line_no, "ranks out of order in topic " + topic);
        last_rank[topic] = rank_field;

        auto prev = last_score.find(topic);
        if (prev != last_score.end() && score > prev->second)
            throw MonotonicityError(line_no, "score increases with rank in topic " + topic);
        last_score[topic] = score;

        auto& ranking = run.rankings[topic];
        if (ranking.topic.empty()) ranking.topic = topic;
        ranking.entries.push_back({std::move(docno), score});
    }
    for (auto& [topic, ranking] : run.rankings) {
        std::sort(ranking.entries.begin(), ranking.entries.end(),
                  [](const ScoredDoc& a, const ScoredDoc& b) {
                      if (a.score != b.score) return a.score > b.score;
                      return a.docno < b.docno;
                  });
        ranking.depth = ranking.entries.size();
    }
    return run;
}

RunFile read_run(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open run: " + path.string());
    return parse_run(in);
}

void write_run(std::ostream& out, const RunFile& run) {
    for (const auto& [topic, ranking] : run.rankings) {
        std::size_t rank_no = 0;
        for (const auto& e : ranking.entries) {
            out << topic << " Q0 " << e.docno << ' ' << ++rank_no << ' '
                << fmt_g(e.score) << ' ' << run.tag << '\n';
        }
    }
}

void save_run(const std::filesystem::path& path, const RunFile& run) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write run: " + path.string());
    write_run(out, run);
}

}  // namespace boir
