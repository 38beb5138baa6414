// SPDX-License-Identifier: Apache-2.0
#include "boir/index.hpp"

#include <fstream>
#include <limits>

#include "boir/errors.hpp"
#include "boir/util.hpp"

namespace boir {

std::string IndexVariant::dir_name() const {
    std::string s = "stop";
    s += stopper ? '1' : '0';
    s += "_stem";
    s += stemmer ? '1' : '0';
    return s;
}

std::array<IndexVariant, 4> IndexVariant::all() {
    return {IndexVariant{false, false}, IndexVariant{false, true},
            IndexVariant{true, false}, IndexVariant{true, true}};
}

double InvertedIndex::avdl() const {
    if (docnos_.empty()) return 0.0;
    return static_cast<double>(total_terms_) / static_cast<double>(docnos_.size());
}

const TermInfo* InvertedIndex::term(std::string_view t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? nullptr : &it->second;
}

std::optional<std::uint32_t> InvertedIndex::ordinal_of(std::string_view docno) const {
    auto it = ordinals_.find(docno);
    if (it == ordinals_.end()) return std::nullopt;
    return it->second;
}

double InvertedIndex::collection_prob(std::string_view t) const {
    if (total_terms_ == 0) throw EmptyCollection();
    auto* info = term(t);
    if (!info) return 0.0;
    return static_cast<double>(info->cf) / static_cast<double>(total_terms_);
}

void InvertedIndex::save(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "stats", std::ios::binary);
        if (!out) throw IoError("cannot write " + (dir / "stats").string());
        out << "format_version=1\n"
            << "stopper=" << (variant.stopper ? 1 : 0) << "\n"
            << "stemmer=" << (variant.stemmer ? 1 : 0) << "\n"
            << "doc_count=" << docnos_.size() << "\n"
            << "total_terms=" << total_terms_ << "\n"
            << "avdl=" << fmt_full(avdl()) << "\n";
    }
    {
        std::ofstream out(dir / "docs.txt", std::ios::binary);
        if (!out) throw IoError("cannot write " + (dir / "docs.txt").string());
        for (std::size_t i = 0; i < docnos_.size(); ++i)
            out << docnos_[i] << '\t' << doc_lengths_[i] << '\n';
    }
    {
        std::ofstream out(dir / "postings.txt", std::ios::binary);
        if (!out) throw IoError("cannot write " + (dir / "postings.txt").string());
        for (const auto& [t, info] : terms_) {
            out << t;
            for (const auto& p : info.postings) out << '\t' << p.doc << ':' << p.tf;
            out << '\n';
        }
    }
}

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

std::uint64_t require_u64(std::string_view s, std::size_t line, const char* what) {
    long v;
    if (!parse_long(s, v) || v < 0)
        throw ParseError(line, std::string("bad ") + what + ": " + std::string(s));
    return static_cast<std::uint64_t>(v);
}

}  // namespace

InvertedIndex InvertedIndex::load(const std::filesystem::path& dir) {
    InvertedIndex idx;
    std::map<std::string, std::string> stats;
    for (auto& [k, v] : parse_kv(slurp(dir / "stats"))) stats[k] = v;
    for (const char* key : {"format_version", "stopper", "stemmer", "doc_count", "total_terms"})
        if (!stats.count(key))
            throw ParseError(1, std::string("stats manifest missing ") + key);
    if (stats["format_version"] != "1")
        throw ParseError(1, "unsupported index format_version " + stats["format_version"]);
    idx.variant.stopper = stats["stopper"] == "1";
    idx.variant.stemmer = stats["stemmer"] == "1";
    const auto want_docs = require_u64(stats["doc_count"], 1, "doc_count");
    const auto want_terms = require_u64(stats["total_terms"], 1, "total_terms");

    {
        std::string text = slurp(dir / "docs.txt");
        std::size_t line_no = 0;
        for (auto line : split_char(text, '\n')) {
            ++line_no;
            if (line.empty()) continue;
            auto tab = line.find('\t');
            if (tab == std::string_view::npos)
                throw ParseError(line_no, "docs.txt line without tab");
            idx.docnos_.emplace_back(line.substr(0, tab));
            if (!idx.ordinals_
                     .emplace(idx.docnos_.back(),
                              static_cast<std::uint32_t>(idx.docnos_.size() - 1))
                     .second)
                throw ParseError(line_no, "duplicate docno in docs.txt");
            idx.doc_lengths_.push_back(
                static_cast<std::uint32_t>(require_u64(line.substr(tab + 1), line_no, "doc length")));
            idx.total_terms_ += idx.doc_lengths_.back();
        }
    }
    if (idx.docnos_.size() != want_docs)
        throw ParseError(1, "doc_count mismatch between stats and docs.txt");
    if (idx.total_terms_ != want_terms)
        throw ParseError(1, "total_terms mismatch between stats and docs.txt");

    {
        std::string text = slurp(dir / "postings.txt");
        std::size_t line_no = 0;
        for (auto line : split_char(text, '\n')) {
            ++line_no;
            if (line.empty()) continue;
            auto fields = split_char(line, '\t');
            if (fields.size() < 2)
                throw ParseError(line_no, "postings.txt line without postings");
            TermInfo info;
            std::uint32_t prev_doc = std::numeric_limits<std::uint32_t>::max();
            for (std::size_t i = 1; i < fields.size(); ++i) {
                auto colon = fields[i].find(':');
                if (colon == std::string_view::npos)
                    throw ParseError(line_no, "posting without ':'");
                auto doc = static_cast<std::uint32_t>(
                    require_u64(fields[i].substr(0, colon), line_no, "doc ordinal"));
                auto tf = static_cast<std::uint32_t>(
                    require_u64(fields[i].substr(colon + 1), line_no, "tf"));
                if (doc >= idx.docnos_.size())
                    throw ParseError(line_no, "doc ordinal out of range");
                if (prev_doc != std::numeric_limits<std::uint32_t>::max() && doc <= prev_doc)
                    throw ParseError(line_no, "postings not in ascending doc order");
                prev_doc = doc;
                info.cf += tf;
                info.postings.push_back({doc, tf});
            }
            auto [it, fresh] = idx.terms_.emplace(std::string(fields[0]), std::move(info));
            (void)it;
            if (!fresh) throw ParseError(line_no, "duplicate term in postings.txt");
        }
    }
    return idx;
}

IndexBuilder::IndexBuilder(IndexVariant variant, const Stoplist& stoplist)
    : stoplist_(stoplist) {
    index_.variant = variant;
}

void IndexBuilder::add(const Document& doc) {
    if (doc.docno.empty()) throw ParseError(0, "document with empty docno");
    auto ordinal = static_cast<std::uint32_t>(index_.docnos_.size());
    if (!index_.ordinals_.emplace(doc.docno, ordinal).second)
        throw DuplicateDocno(doc.docno);

    auto tokens = tokenize(doc.text);
    if (index_.variant.stopper) tokens = apply_stopper(std::move(tokens), stoplist_);
    if (index_.variant.stemmer) tokens = apply_stemmer(std::move(tokens));

    std::map<std::string, std::uint32_t, std::less<>> tf;
    for (auto& t : tokens) ++tf[std::move(t)];

    index_.docnos_.push_back(doc.docno);
    index_.doc_lengths_.push_back(static_cast<std::uint32_t>(tokens.size()));
    index_.total_terms_ += tokens.size();
    for (auto& [t, n] : tf) {
        auto& info = index_.terms_[t];
        info.postings.push_back({ordinal, n});
        info.cf += n;
    }
}

InvertedIndex IndexBuilder::finish() && { return std::move(index_); }

InvertedIndex build_index(const std::vector<Document>& corpus, IndexVariant variant,
                          const Stoplist& stoplist) {
    IndexBuilder builder(variant, stoplist);
    for (const auto& doc : corpus) builder.add(doc);
    return std::move(builder).finish();
}

}  // namespace boir
