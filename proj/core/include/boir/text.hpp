// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace boir {

/// Bundled default English stoplist (418 words, one per line).
extern const char* const kDefaultStopwords;

/// Splits text into maximal runs of word characters, lowercased. ASCII
/// alphanumerics are word characters; so is every non-ASCII byte, which keeps
/// UTF-8 sequences intact. Case folding is ASCII-only. Everything else
/// separates tokens.
std::vector<std::string> tokenize(std::string_view text);

class Stoplist {
public:
    Stoplist() = default;

    /// The bundled 418-word English list.
    static Stoplist bundled();

    /// One word per line; blank lines ignored.
    static Stoplist load(const std::filesystem::path& path);
    static Stoplist from_text(std::string_view text);

    bool contains(std::string_view token) const;
    std::size_t size() const { return words_.size(); }

    /// One word per line, sorted, trailing newline.
    std::string to_text() const;

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    std::unordered_set<std::string, Hash, std::equal_to<>> words_;
};

/// Order-preserving removal of stoplisted tokens.
std::vector<std::string> apply_stopper(std::vector<std::string> tokens,
                                       const Stoplist& stoplist);

/// Porter-stems every token in place; order preserved.
std::vector<std::string> apply_stemmer(std::vector<std::string> tokens);

}  // namespace boir
