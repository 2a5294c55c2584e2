#pragma once

// graph6 exchange format: N(n) size header, then the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// big-endian, each byte biased by 63.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mainspectra/graph.hpp"

namespace mainspectra {

struct Graph6Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string graph6_size_header(std::uint64_t n) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
    return out;
}

}  // namespace detail

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out = detail::graph6_size_header(static_cast<std::uint64_t>(n));
    int value = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    for (char c : text)
        if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside the printable range 63..126");
    if (text.empty()) throw Graph6Error("graph6: empty string");

    auto take = [&](std::size_t count) {
        if (text.size() < count) throw Graph6Error("graph6: truncated size header");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(text[i] - 63);
        text.remove_prefix(count);
        return v;
    };

    std::uint64_t n = 0;
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() >= 2 && text[1] == 126) {
        text.remove_prefix(2);
        n = take(6);
        if (n <= 258047) throw Graph6Error("graph6: non-canonical 8-byte size header");
    } else {
        text.remove_prefix(1);
        n = take(3);
        if (n <= 62) throw Graph6Error("graph6: non-canonical 4-byte size header");
    }
    if (n == 0) throw Graph6Error("graph6: graphs must have at least one vertex");
    if (n > static_cast<std::uint64_t>(vertex_cap()))
        throw Graph6Error("graph6: " + std::to_string(n) + " vertices exceeds the vertex cap");

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() < bytes) throw Graph6Error("graph6: truncated edge payload");
    if (text.size() > bytes) throw Graph6Error("graph6: trailing bytes after edge payload");

    GraphBuilder b(static_cast<int>(n));
    std::uint64_t k = 0;
    for (int v = 1; v < static_cast<int>(n); ++v)
        for (int u = 0; u < v; ++u, ++k) {
            const int byte = text[k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) b.add_edge(u, v);
        }
    if (bits % 6 != 0) {
        const int last = text[bytes - 1] - 63;
        if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("graph6: nonzero padding bits");
    }
    return std::move(b).build();
}

}  // namespace mainspectra
