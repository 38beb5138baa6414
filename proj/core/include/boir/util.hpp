// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace boir {

/// %g rendering: 6 significant digits, trailing zeros trimmed. The run-file
/// score format.
std::string fmt_g(double v);

/// %.17g rendering: round-trips a double exactly through parse_double.
std::string fmt_full(double v);

/// %.Nf fixed-point rendering.
std::string fmt_fixed(double v, int places);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_ws(std::string_view s);
std::vector<std::string_view> split_char(std::string_view s, char sep);

bool parse_double(std::string_view s, double& out);
bool parse_long(std::string_view s, long& out);

/// Orders topic identifiers: all-digit ids sort numerically before any
/// non-numeric id; everything else is byte-lexicographic.
struct TopicOrder {
    bool operator()(std::string_view a, std::string_view b) const;
};

/// Splits `key=value` lines (or comma-joined pairs). Blank lines and lines
/// starting with '#' are skipped. Throws ParseError on a line without '='.
std::vector<std::pair<std::string, std::string>> parse_kv(std::string_view text,
                                                          char pair_sep = '\n');

}  // namespace boir
