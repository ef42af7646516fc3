#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "regw/graph.hpp"

namespace regw {

// graph6: the nauty ascii encoding.  Header N(n) is one byte n+63 for
// n <= 62 or '~' plus three 6-bit bytes for n <= 258047; the upper
// triangle follows column by column, packed 6 bits per byte, each byte
// offset by 63.

namespace detail {

inline int g6_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
    unsigned char ch = static_cast<unsigned char>(text[pos]);
    if (ch < 63 || ch > 126)
        throw ParseError("graph6: byte out of range [63,126]", pos);
    return ch - 63;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: empty input", 0);
    std::size_t pos = 0;
    long long n = 0;
    int first = detail::g6_byte(text, pos);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // '~' prefix: 3-byte vertex count.  The 8-byte '~~' form is not
        // supported.
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6: counts above 258047 unsupported", 1);
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | detail::g6_byte(text, pos);
        if (n < 63) throw ParseError("graph6: non-minimal long-form header", 0);
    }
    long long bits = n * (n - 1) / 2;
    long long bytes = (bits + 5) / 6;
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int group = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) group = detail::g6_byte(text, pos++);
            if (group & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    }
    if (bit % 6 != 0 && (group & ((1 << (6 - bit % 6)) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits", pos - 1);
    (void)bytes;
    if (pos != text.size()) throw ParseError("graph6: trailing garbage", pos);
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline std::string encode_graph6(const Graph& g) {
    int n = g.num_vertices();
    if (n > 258047) throw InputError("graph6: counts above 258047 unsupported");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) group |= 1 << (5 - bit % 6);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
            }
        }
    }
    if (bit % 6 != 0) out.push_back(static_cast<char>(group + 63));
    return out;
}

// Edge-list text: a vertex-count header line, then whitespace-separated
// "u v" pairs (0-based).
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n;
    if (!(in >> n)) throw ParseError("edge list: missing vertex-count header", 0);
    if (n < 0) throw InputError("edge list: negative vertex count");
    std::vector<std::pair<int, int>> edges;
    long long u, v;
    while (in >> u) {
        if (!(in >> v))
            throw ParseError("edge list: dangling endpoint", text.size());
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) {
        in.clear();
        std::string tok;
        in >> tok;
        throw ParseError("edge list: unexpected token '" + tok + "'", text.size());
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.num_vertices()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// Auto-detecting reader for single-graph inputs: a leading digit means
// edge list (digits are below the graph6 byte range, so this is
// unambiguous); anything else is treated as graph6 (first line).
inline Graph parse_graph_auto(std::string_view text) {
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string_view::npos) throw ParseError("empty graph input", 0);
    if (text[pos] >= '0' && text[pos] <= '9') return parse_edge_list(text);
    std::size_t end = text.find_first_of("\r\n", pos);
    if (end == std::string_view::npos) end = text.size();
    return parse_graph6(text.substr(pos, end - pos));
}

// One corpus line: either a parsed graph or the parse error for that line.
struct CorpusEntry {
    int line_no = 0;  // 1-based
    std::string text;
    std::optional<Graph> graph;
    std::string error;
};

// Splits a graph6 corpus into per-line results; blank lines are skipped
// and bad lines are reported without aborting the rest.
inline std::vector<CorpusEntry> parse_graph6_corpus(std::string_view text) {
    std::vector<CorpusEntry> out;
    int line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(begin, end - begin);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            CorpusEntry entry;
            entry.line_no = line_no;
            entry.text = std::string(line);
            try {
                entry.graph = parse_graph6(line);
            } catch (const Error& e) {
                entry.error = e.what();
            }
            out.push_back(std::move(entry));
        }
        if (end == text.size()) break;
        begin = end + 1;
    }
    return out;
}

}  // namespace regw
