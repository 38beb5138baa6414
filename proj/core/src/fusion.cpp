// SPDX-License-Identifier: Apache-2.0
#include "boir/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "boir/errors.hpp"

namespace boir {

namespace {

struct ZScores {
    std::map<std::string, double> z;  // docno -> z score
    double min_z = 0;
};

ZScores standardize(const Ranking& ranking) {
    ZScores out;
    const auto n = static_cast<double>(ranking.entries.size());
    double mean = 0;
    for (const auto& e : ranking.entries) mean += e.score;
    mean /= n;
    double var = 0;
    for (const auto& e : ranking.entries) var += (e.score - mean) * (e.score - mean);
    var /= n;
    const double std_dev = std::sqrt(var);
    bool first = true;
    for (const auto& e : ranking.entries) {
        const double z = std_dev > 0 ? (e.score - mean) / std_dev : 0.0;
        out.z[e.docno] = z;
        if (first || z < out.min_z) out.min_z = z;
        first = false;
    }
    return out;
}

}  // namespace

RunFile zsum_fuse(const RunFile& a, const RunFile& b, const std::string& tag) {
    if (a.rankings.empty()) throw EmptyRun("first run has no rankings");
    if (b.rankings.empty()) throw EmptyRun("second run has no rankings");

    RunFile fused;
    fused.tag = tag;

    std::set<std::string, TopicOrder> topics;
    for (const auto& [t, r] : a.rankings) topics.insert(t);
    for (const auto& [t, r] : b.rankings) topics.insert(t);

    for (const auto& topic : topics) {
        auto ia = a.rankings.find(topic);
        auto ib = b.rankings.find(topic);
        const Ranking* ra = ia == a.rankings.end() ? nullptr : &ia->second;
        const Ranking* rb = ib == b.rankings.end() ? nullptr : &ib->second;
        if (ra && ra->entries.empty()) ra = nullptr;
        if (rb && rb->entries.empty()) rb = nullptr;
        if (!ra && !rb) continue;

        ZScores za, zb;
        if (ra) za = standardize(*ra);
        if (rb) zb = standardize(*rb);

        std::set<std::string> docs;
        if (ra)
            for (const auto& e : ra->entries) docs.insert(e.docno);
        if (rb)
            for (const auto& e : rb->entries) docs.insert(e.docno);

        Ranking out;
        out.topic = topic;
        for (const auto& d : docs) {
            double s = 0;
            if (ra) {
                auto it = za.z.find(d);
                s += it != za.z.end() ? it->second : za.min_z;
            }
            if (rb) {
                auto it = zb.z.find(d);
                s += it != zb.z.end() ? it->second : zb.min_z;
            }
            out.entries.push_back({d, s});
        }
        std::sort(out.entries.begin(), out.entries.end(),
                  [](const ScoredDoc& x, const ScoredDoc& y) {
                      if (x.score != y.score) return x.score > y.score;
                      return x.docno < y.docno;
                  });
        const std::size_t depth = std::max(ra ? ra->entries.size() : 0,
                                           rb ? rb->entries.size() : 0);
        if (out.entries.size() > depth) out.entries.resize(depth);
        out.depth = depth;
        fused.rankings.emplace(topic, std::move(out));
    }
    return fused;
}

}  // namespace boir
