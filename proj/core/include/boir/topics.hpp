// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace boir {

struct Topic {
    std::string id;
    std::string title;
    std::string desc;
};

/// TREC topic format: <top> <num> Number: id <title> ... <desc> ... </top>.
std::vector<Topic> parse_topics_trec(std::istream& in);

/// One topic per line: id <TAB> query text. The text fills the title field.
std::vector<Topic> parse_topics_tsv(std::istream& in);

/// Sniffs the format from the first non-blank character ('<' means TREC).
std::vector<Topic> read_topics(const std::filesystem::path& path);

}  // namespace boir
