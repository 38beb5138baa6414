// SPDX-License-Identifier: Apache-2.0
#include "boir/util.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "boir/errors.hpp"

namespace boir {

namespace {

std::string printf_fmt(const char* fmt, double v) {
    char buf[64];
    int n = std::snprintf(buf, sizeof(buf), fmt, v);
    return std::string(buf, static_cast<std::size_t>(n));
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::string fmt_g(double v) { return printf_fmt("%g", v); }

std::string fmt_full(double v) { return printf_fmt("%.17g", v); }

std::string fmt_fixed(double v, int places) {
    char buf[64];
    int n = std::snprintf(buf, sizeof(buf), "%.*f", places, v);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_char(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (s.empty()) return false;
    // std::from_chars for double is unreliable on older toolchains; strtod on a
    // NUL-terminated copy keeps the behaviour uniform.
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return false;
    out = v;
    return true;
}

bool parse_long(std::string_view s, long& out) {
    s = trim(s);
    if (s.empty()) return false;
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return false;
    out = v;
    return true;
}

bool TopicOrder::operator()(std::string_view a, std::string_view b) const {
    bool na = all_digits(a), nb = all_digits(b);
    if (na != nb) return na;  // numeric ids before everything else
    if (na && nb) {
        if (a.size() != b.size()) {
            // Strip leading zeros by comparing lengths of significant digits.
            auto sig = [](std::string_view s) {
                auto p = s.find_first_not_of('0');
                return p == std::string_view::npos ? std::string_view("0") : s.substr(p);
            };
            std::string_view sa = sig(a), sb = sig(b);
            if (sa.size() != sb.size()) return sa.size() < sb.size();
            if (sa != sb) return sa < sb;
        } else if (a != b) {
            return a < b;
        }
        return a < b;  // equal values: leading-zero form decides
    }
    return a < b;
}

std::vector<std::pair<std::string, std::string>> parse_kv(std::string_view text,
                                                          char pair_sep) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t line_no = 0;
    for (auto piece : split_char(text, pair_sep)) {
        ++line_no;
        auto s = trim(piece);
        if (s.empty() || s.front() == '#') continue;
        auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "expected key=value, got '" + std::string(s) + "'");
        out.emplace_back(std::string(trim(s.substr(0, eq))),
                         std::string(trim(s.substr(eq + 1))));
    }
    return out;
}

}  // namespace boir
