// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "boir/corpus.hpp"
#include "boir/text.hpp"

namespace boir {

/// One preprocessing variant. Four exist per corpus (the cross product).
struct IndexVariant {
    bool stopper = false;
    bool stemmer = false;

    /// Directory name, e.g. "stop1_stem0".
    std::string dir_name() const;

    static std::array<IndexVariant, 4> all();

    bool operator==(const IndexVariant&) const = default;
};

struct Posting {
    std::uint32_t doc;  // document ordinal
    std::uint32_t tf;
};

struct TermInfo {
    std::vector<Posting> postings;  // ascending doc ordinal
    std::uint64_t cf = 0;

    std::size_t df() const { return postings.size(); }
};

class InvertedIndex {
public:
    IndexVariant variant;

    std::size_t doc_count() const { return docnos_.size(); }
    std::uint64_t total_terms() const { return total_terms_; }
    double avdl() const;

    const std::string& docno(std::uint32_t ordinal) const { return docnos_[ordinal]; }
    std::uint32_t doc_length(std::uint32_t ordinal) const { return doc_lengths_[ordinal]; }

    /// Ordinal for a docno; nullopt if the docno is not in this index.
    std::optional<std::uint32_t> ordinal_of(std::string_view docno) const;

    /// nullptr for unseen terms.
    const TermInfo* term(std::string_view t) const;

    /// cf[term] / total_terms; 0 for unseen terms. Throws EmptyCollection when
    /// the index holds no terms at all.
    double collection_prob(std::string_view t) const;

    const std::map<std::string, TermInfo, std::less<>>& terms() const { return terms_; }
    const std::vector<std::string>& docnos() const { return docnos_; }

    /// Writes stats, docs.txt and postings.txt into dir (created if needed).
    /// Rebuilding from the same corpus produces byte-identical files.
    void save(const std::filesystem::path& dir) const;
    static InvertedIndex load(const std::filesystem::path& dir);

private:
    friend class IndexBuilder;

    struct SvHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::map<std::string, TermInfo, std::less<>> terms_;
    std::vector<std::string> docnos_;
    std::vector<std::uint32_t> doc_lengths_;
    std::uint64_t total_terms_ = 0;
    std::unordered_map<std::string, std::uint32_t, SvHash, std::equal_to<>> ordinals_;
};

/// Accumulates documents into an index. Pipeline order is tokenize, then stop
/// (if variant.stopper), then stem (if variant.stemmer).
class IndexBuilder {
public:
    IndexBuilder(IndexVariant variant, const Stoplist& stoplist);

    void add(const Document& doc);
    InvertedIndex finish() &&;

private:
    InvertedIndex index_;
    const Stoplist& stoplist_;
};

InvertedIndex build_index(const std::vector<Document>& corpus, IndexVariant variant,
                          const Stoplist& stoplist);

}  // namespace boir
