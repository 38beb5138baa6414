// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <functional>
#include <istream>
#include <string>

namespace boir {

struct Document {
    std::string docno;
    std::string text;
};

using DocumentSink = std::function<void(Document)>;

/// TREC SGML: <DOC> ... <DOCNO>id</DOCNO> ... </DOC>. The body is everything
/// inside the DOC element with markup tags stripped and the DOCNO element
/// removed.
void read_trec_sgml(std::istream& in, const DocumentSink& sink);

/// Line-delimited JSON records with "docno" and "text" fields.
void read_jsonl(std::istream& in, const DocumentSink& sink);

/// Sniffs the format from the first non-blank character ('<' means TREC SGML,
/// '{' means JSONL) and streams documents to the sink.
void read_corpus(const std::filesystem::path& path, const DocumentSink& sink);

}  // namespace boir
