// SPDX-License-Identifier: Apache-2.0
#include "boir/text.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "boir/errors.hpp"
#include "boir/porter.hpp"
#include "boir/util.hpp"

namespace boir {

namespace {

inline bool is_word_byte(unsigned char c) {
    if (c >= 0x80) return true;  // keep UTF-8 sequences intact
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

inline char fold(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a')
                                  : static_cast<char>(c);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (unsigned char c : text) {
        if (is_word_byte(c)) {
            cur.push_back(fold(c));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

Stoplist Stoplist::bundled() { return from_text(kDefaultStopwords); }

Stoplist Stoplist::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stoplist: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

Stoplist Stoplist::from_text(std::string_view text) {
    Stoplist s;
    for (auto line : split_char(text, '\n')) {
        auto w = trim(line);
        if (!w.empty()) s.words_.insert(std::string(w));
    }
    return s;
}

bool Stoplist::contains(std::string_view token) const {
    return words_.find(token) != words_.end();
}

std::string Stoplist::to_text() const {
    std::vector<std::string> sorted(words_.begin(), words_.end());
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (const auto& w : sorted) {
        out += w;
        out += '\n';
    }
    return out;
}

std::vector<std::string> apply_stopper(std::vector<std::string> tokens,
                                       const Stoplist& stoplist) {
    std::erase_if(tokens, [&](const std::string& t) { return stoplist.contains(t); });
    return tokens;
}

std::vector<std::string> apply_stemmer(std::vector<std::string> tokens) {
    for (auto& t : tokens) t = porter_stem(t);
    return tokens;
}

}  // namespace boir
