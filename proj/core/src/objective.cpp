// SPDX-License-Identifier: Apache-2.0
#include "boir/objective.hpp"

#include <algorithm>
#include <fstream>

#include "boir/errors.hpp"
#include "boir/retrieval.hpp"
#include "boir/util.hpp"

namespace boir {

IndexSet IndexSet::build(const std::vector<Document>& corpus, Stoplist stoplist) {
    IndexSet set;
    set.stoplist = std::move(stoplist);
    for (const auto& variant : IndexVariant::all())
        set.variants[(variant.stopper ? 2 : 0) + (variant.stemmer ? 1 : 0)] =
            build_index(corpus, variant, set.stoplist);
    return set;
}

IndexSet IndexSet::load(const std::filesystem::path& root) {
    IndexSet set;
    const auto stopfile = root / "stoplist.txt";
    if (std::filesystem::exists(stopfile))
        set.stoplist = Stoplist::load(stopfile);
    else
        set.stoplist = Stoplist::bundled();
    for (const auto& variant : IndexVariant::all()) {
        const auto dir = root / variant.dir_name();
        if (!std::filesystem::is_directory(dir))
            throw IoError("missing index variant directory: " + dir.string());
        auto& slot = set.variants[(variant.stopper ? 2 : 0) + (variant.stemmer ? 1 : 0)];
        slot = InvertedIndex::load(dir);
        if (!(slot.variant == variant))
            throw ParseError(1, "index in " + dir.string() + " declares a different variant");
    }
    return set;
}

void IndexSet::save(const std::filesystem::path& root) const {
    std::filesystem::create_directories(root);
    {
        std::ofstream out(root / "stoplist.txt", std::ios::binary);
        if (!out) throw IoError("cannot write " + (root / "stoplist.txt").string());
        out << stoplist.to_text();
    }
    for (const auto& index : variants) index.save(root / index.variant.dir_name());
}

RunFile make_run(const InvertedIndex& index, const Stoplist& stoplist,
                 const std::vector<Topic>& topics, const RetrievalConfig& config,
                 std::size_t depth, const std::string& tag, bool use_desc) {
    RunFile run;
    run.tag = tag;
    for (const auto& topic : topics) {
        const std::string& text =
            use_desc && !topic.desc.empty() ? topic.desc : topic.title;
        WeightedQuery query;
        try {
            query = make_query(text, index.variant, stoplist);
        } catch (const EmptyQuery&) {
            continue;
        }
        Ranking ranking = rank(index, query, config, depth, topic.id);
        if (!run.rankings.emplace(topic.id, std::move(ranking)).second)
            throw UserError("duplicate topic id: " + topic.id);
    }
    return run;
}

double objective_map(const IndexSet& indexes, const std::vector<Topic>& topics,
                     const Qrels& qrels, const ConfigPoint& point,
                     std::size_t depth, bool use_desc) {
    RunFile run = make_run(indexes.get(point.variant()), indexes.stoplist, topics,
                           point.retrieval_config(), depth, "objective", use_desc);
    try {
        return evaluate_run(run, qrels).map;
    } catch (const NoOverlap&) {
        return 0.0;
    }
}

void append_history(std::ostream& out, const HistoryRecord& record) {
    out << record.iteration << '\t' << record.point.serialize(',') << '\t'
        << fmt_full(record.y) << '\t' << fmt_full(record.best) << '\n';
    out.flush();
}

std::vector<HistoryRecord> load_history(std::istream& in) {
    std::vector<HistoryRecord> records;
    std::string line;
    std::size_t line_no = 0;
    double best = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto s = trim(line);
        if (s.empty()) continue;
        auto fields = split_char(s, '\t');
        if (fields.size() != 4)
            throw ParseError(line_no, "expected 4 tab-separated fields, got " +
                                          std::to_string(fields.size()));
        HistoryRecord r;
        long iter;
        if (!parse_long(fields[0], iter) || iter < 1)
            throw ParseError(line_no, "bad iteration: " + std::string(fields[0]));
        r.iteration = static_cast<std::size_t>(iter);
        if (r.iteration != records.size() + 1)
            throw ParseError(line_no, "iteration sequence has a gap");
        r.point = ConfigPoint::parse(fields[1], ',');
        if (!parse_double(fields[2], r.y))
            throw ParseError(line_no, "bad objective value: " + std::string(fields[2]));
        if (!parse_double(fields[3], r.best))
            throw ParseError(line_no, "bad incumbent value: " + std::string(fields[3]));
        best = records.empty() ? r.y : std::max(best, r.y);
        if (r.best != best)
            throw ParseError(line_no, "incumbent value disagrees with history");
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace boir
