// SPDX-License-Identifier: Apache-2.0
#include "boir/corpus.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "boir/errors.hpp"
#include "boir/util.hpp"

namespace boir {

namespace {

std::string strip_tags(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_tag = false;
    for (char c : s) {
        if (c == '<') {
            in_tag = true;
            out.push_back(' ');
        } else if (c == '>') {
            in_tag = false;
        } else if (!in_tag) {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace

void read_trec_sgml(std::istream& in, const DocumentSink& sink) {
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    auto line_at = [&](std::size_t p) {
        return 1 + static_cast<std::size_t>(
                       std::count(content.begin(), content.begin() + static_cast<long>(p), '\n'));
    };
    std::size_t pos = 0;
    while (true) {
        auto doc_open = content.find("<DOC>", pos);
        if (doc_open == std::string::npos) break;
        auto doc_close = content.find("</DOC>", doc_open);
        if (doc_close == std::string::npos)
            throw ParseError(line_at(doc_open), "unterminated <DOC> element");
        std::string_view body(content.data() + doc_open + 5, doc_close - doc_open - 5);

        auto no_open = body.find("<DOCNO>");
        if (no_open == std::string_view::npos)
            throw ParseError(line_at(doc_open), "<DOC> without <DOCNO>");
        auto no_close = body.find("</DOCNO>", no_open);
        if (no_close == std::string_view::npos)
            throw ParseError(line_at(doc_open), "unterminated <DOCNO>");
        std::string docno(trim(body.substr(no_open + 7, no_close - no_open - 7)));
        if (docno.empty()) throw ParseError(line_at(doc_open), "empty <DOCNO>");

        std::string text = strip_tags(body.substr(0, no_open));
        text += strip_tags(body.substr(no_close + 8));
        sink(Document{std::move(docno), std::move(text)});
        pos = doc_close + 6;
    }
}

void read_jsonl(std::istream& in, const DocumentSink& sink) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto s = trim(line);
        if (s.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(s, nullptr, false);
        if (rec.is_discarded()) throw ParseError(line_no, "invalid JSON record");
        if (!rec.contains("docno") || !rec["docno"].is_string())
            throw ParseError(line_no, "record missing string field 'docno'");
        if (!rec.contains("text") || !rec["text"].is_string())
            throw ParseError(line_no, "record missing string field 'text'");
        sink(Document{rec["docno"].get<std::string>(), rec["text"].get<std::string>()});
    }
}

void read_corpus(const std::filesystem::path& path, const DocumentSink& sink) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus: " + path.string());
    int c;
    while ((c = in.peek()) != EOF &&
           (c == ' ' || c == '\t' || c == '\r' || c == '\n'))
        in.get();
    if (c == EOF) return;  // empty corpus: zero documents
    if (c == '{')
        read_jsonl(in, sink);
    else if (c == '<')
        read_trec_sgml(in, sink);
    else
        throw ParseError(1, "unrecognized corpus format (expected TREC SGML or JSONL)");
}

}  // namespace boir
