// SPDX-License-Identifier: Apache-2.0
#include "boir/topics.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <string_view>

#include "boir/errors.hpp"
#include "boir/util.hpp"

namespace boir {

namespace {

// Removes a leading field label such as "Number:" or "Description:".
std::string_view strip_label(std::string_view s) {
    s = trim(s);
    auto colon = s.find(':');
    if (colon != std::string_view::npos && colon < 16) {
        bool wordy = colon > 0;
        for (std::size_t i = 0; i < colon && wordy; ++i)
            if (!std::isalpha(static_cast<unsigned char>(s[i]))) wordy = false;
        if (wordy) s = trim(s.substr(colon + 1));
    }
    return s;
}

std::string collapse_ws(std::string_view s) {
    std::string out;
    bool in_space = false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            in_space = !out.empty();
        } else {
            if (in_space) out.push_back(' ');
            in_space = false;
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::vector<Topic> parse_topics_trec(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    auto line_at = [&](std::size_t p) {
        return 1 + static_cast<std::size_t>(
                       std::count(content.begin(), content.begin() + static_cast<long>(p), '\n'));
    };
    // A field runs from its opening tag to the next topic tag.
    static const char* kTags[] = {"<top>", "</top>", "<num>", "<title>", "<desc>", "<narr>"};
    auto next_tag = [&](std::size_t from) {
        std::size_t best = content.size();
        for (const char* tag : kTags) {
            auto p = content.find(tag, from);
            if (p != std::string::npos) best = std::min(best, p);
        }
        return best;
    };
    auto field = [&](std::size_t open_end) {
        return std::string_view(content).substr(open_end, next_tag(open_end) - open_end);
    };

    std::vector<Topic> topics;
    std::size_t pos = 0;
    while (true) {
        auto top_open = content.find("<top>", pos);
        if (top_open == std::string::npos) break;
        auto top_close = content.find("</top>", top_open);
        if (top_close == std::string::npos)
            throw ParseError(line_at(top_open), "unterminated <top> element");

        Topic t;
        auto num = content.find("<num>", top_open);
        if (num == std::string::npos || num > top_close)
            throw ParseError(line_at(top_open), "topic without <num>");
        t.id = std::string(strip_label(field(num + 5)));
        if (t.id.empty()) throw ParseError(line_at(num), "empty topic number");

        auto title = content.find("<title>", top_open);
        if (title == std::string::npos || title > top_close)
            throw ParseError(line_at(top_open), "topic without <title>");
        t.title = collapse_ws(strip_label(field(title + 7)));

        auto desc = content.find("<desc>", top_open);
        if (desc != std::string::npos && desc < top_close)
            t.desc = collapse_ws(strip_label(field(desc + 6)));

        topics.push_back(std::move(t));
        pos = top_close + 6;
    }
    return topics;
}

std::vector<Topic> parse_topics_tsv(std::istream& in) {
    std::vector<Topic> topics;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        auto tab = s.find('\t');
        if (tab == std::string_view::npos)
            throw ParseError(line_no, "topic line without tab separator");
        Topic t;
        t.id = std::string(trim(s.substr(0, tab)));
        t.title = collapse_ws(trim(s.substr(tab + 1)));
        if (t.id.empty()) throw ParseError(line_no, "empty topic id");
        topics.push_back(std::move(t));
    }
    return topics;
}

std::vector<Topic> read_topics(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open topics: " + path.string());
    int c;
    while ((c = in.peek()) != EOF &&
           (c == ' ' || c == '\t' || c == '\r' || c == '\n'))
        in.get();
    if (c == '<') return parse_topics_trec(in);
    return parse_topics_tsv(in);
}

}  // namespace boir
