#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "parakit/graph.hpp"

namespace parakit {

// Malformed graph6 input, with the byte offset of the offending symbol.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Bit-exact graph6 per the published format: N(n) followed by the upper
// triangle in column order, six bits per printable byte 63..126.
inline std::string encode_graph6(const Graph& g) {
    std::string out;
    const int n = g.n();
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 0x3f) + 63));
        out.push_back(char(((n >> 6) & 0x3f) + 63));
        out.push_back(char((n & 0x3f) + 63));
    }
    const int bits = n * (n - 1) / 2;
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6 != 0) out.push_back(char((acc << (6 - bits % 6)) + 63));
    return out;
}

inline Graph decode_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t at) -> unsigned {
        if (at >= text.size()) throw Graph6ParseError(at, "unexpected end of input");
        const unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw Graph6ParseError(at, "byte outside graph6 range");
        return c - 63;
    };

    long long n;
    if (static_cast<unsigned char>(text.empty() ? 0 : text[0]) == 126) {
        n = (long long)(need(1)) << 12 | (long long)(need(2)) << 6 | need(3);
        pos = 4;
    } else {
        n = need(0);
        pos = 1;
    }
    if (n > Graph::max_vertices)
        throw Graph6ParseError(0, "vertex count " + std::to_string(n) + " exceeds cap");

    Graph g(int(n));
    const long long bits = n * (n - 1) / 2;
    const std::size_t body = std::size_t((bits + 5) / 6);
    if (text.size() != pos + body)
        throw Graph6ParseError(text.size() < pos + body ? text.size() : pos + body,
                               text.size() < pos + body ? "truncated edge data"
                                                        : "trailing bytes after edge data");
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const unsigned v = need(pos + std::size_t(bit / 6));
            if ((v >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    if (bits % 6 != 0) {
        const unsigned last = need(text.size() - 1);
        const unsigned pad = last & ((1u << (6 - bits % 6)) - 1);
        if (pad != 0) throw Graph6ParseError(text.size() - 1, "nonzero padding bits");
    }
    return g;
}

} // namespace parakit
