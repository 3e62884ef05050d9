#include "lovasz/graph.hpp"

#include <charconv>
#include <sstream>

namespace lovasz {

namespace {

constexpr int kBias = 63;
constexpr int kLongFormMarker = 126;

std::string_view strip_newline(std::string_view s) {
    if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = strip_newline(text);
    if (text.empty()) throw ParseError("graph6: empty input, expected a size byte at offset 0", 0);

    for (std::size_t k = 0; k < text.size(); ++k) {
        const int c = static_cast<unsigned char>(text[k]);
        if (c < kBias || c > 126)
            throw ParseError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(k) +
                                 " is outside [63,126]",
                             k);
    }

    const int head = static_cast<unsigned char>(text[0]);
    if (head == kLongFormMarker)
        throw ParseError("graph6: long-form header (n > 62) at offset 0 is not supported", 0);
    const int n = head - kBias;

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < 1 + nbytes)
        throw ParseError("graph6: data section ends at offset " + std::to_string(text.size()) +
                             ", expected " + std::to_string(nbytes) + " data bytes for n=" +
                             std::to_string(n),
                         text.size());
    if (text.size() > 1 + nbytes)
        throw ParseError("graph6: trailing bytes starting at offset " + std::to_string(1 + nbytes),
                         1 + nbytes);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    auto get_bit = [&](std::size_t b) {
        const int value = static_cast<unsigned char>(text[1 + b / 6]) - kBias;
        return (value >> (5 - b % 6)) & 1;
    };
    // upper triangle, column by column
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (get_bit(bit)) edges.emplace_back(i, j);
    for (; bit < nbytes * 6; ++bit)
        if (get_bit(bit))
            throw ParseError("graph6: nonzero padding bit at offset " + std::to_string(1 + bit / 6),
                             1 + bit / 6);

    return Graph(n, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    std::vector<Edge> edges;

    auto parse_int = [&](const std::string& tok) {
        int v = 0;
        const auto* first = tok.data();
        const auto* last = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": '" + tok +
                                 "' is not an integer",
                             lineno);
        return v;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        if (n < 0) {
            if (toks.size() != 1)
                throw ParseError("edge list: line " + std::to_string(lineno) +
                                     ": expected the vertex count alone",
                                 lineno);
            n = parse_int(toks[0]);
            if (n < 0)
                throw ParseError("edge list: line " + std::to_string(lineno) + ": negative vertex count",
                                 lineno);
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": expected 'i j'", lineno);
        const int i = parse_int(toks[0]);
        const int j = parse_int(toks[1]);
        if (i == j)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": self-loop at vertex " +
                                 std::to_string(i),
                             lineno);
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": vertex index out of range [0," +
                                 std::to_string(n) + ")",
                             lineno);
        edges.emplace_back(i, j);
    }
    if (n < 0) throw ParseError("edge list: missing vertex count", lineno);
    return Graph(n, std::move(edges));
}

}  // namespace lovasz
