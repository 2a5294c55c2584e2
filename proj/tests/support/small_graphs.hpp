#pragma once

// Isomorph-free generation of all graphs on up to 8 vertices, by vertex
// extension and a canonical form from individualization-refinement.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mainspectra/graph.hpp"
#include "mainspectra/graph6.hpp"

namespace testsupport {

using Rows = std::vector<std::uint32_t>;  // adjacency bit rows, n <= 8

inline std::vector<std::vector<int>> refine(const Rows& rows, std::vector<std::vector<int>> cells) {
    for (;;) {
        std::vector<std::vector<int>> next;
        for (const auto& cell : cells) {
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig;
                for (const auto& c : cells) {
                    int k = 0;
                    for (int w : c) k += (rows[v] >> w) & 1U;
                    sig.push_back(k);
                }
                split[sig].push_back(v);
            }
            for (auto& [sig, part] : split) next.push_back(std::move(part));
        }
        if (next.size() == cells.size()) return next;
        cells = std::move(next);
    }
}

inline std::uint64_t code_of(const Rows& rows, const std::vector<std::vector<int>>& cells) {
    std::vector<int> order;
    for (const auto& c : cells) order.push_back(c.front());
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) code = (code << 1) | ((rows[order[i]] >> order[j]) & 1U);
    return code;
}

inline void search(const Rows& rows, const std::vector<std::vector<int>>& cells, std::uint64_t& best) {
    const auto it = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (it == cells.end()) {
        best = std::max(best, code_of(rows, cells));
        return;
    }
    const auto target = static_cast<std::size_t>(it - cells.begin());
    for (int v : cells[target]) {
        auto split = cells;
        std::vector<int> rest;
        for (int w : cells[target])
            if (w != v) rest.push_back(w);
        split[target] = {v};
        split.insert(split.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
        search(rows, refine(rows, split), best);
    }
}

/// Isomorphism-invariant code (with the order in the top bits).
inline std::uint64_t canonical_code(const Rows& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    std::uint64_t best = 0;
    search(rows, refine(rows, {all}), best);
    return (static_cast<std::uint64_t>(n) << 40) | best;
}

inline mainspectra::Graph to_graph(const Rows& rows) {
    mainspectra::GraphBuilder b(static_cast<int>(rows.size()));
    for (std::size_t u = 0; u < rows.size(); ++u)
        for (std::size_t v = u + 1; v < rows.size(); ++v)
            if ((rows[u] >> v) & 1U) b.add_edge(static_cast<int>(u), static_cast<int>(v));
    return std::move(b).build();
}

inline Rows to_rows(const mainspectra::Graph& g) {
    Rows rows(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : g.edges()) {
        rows[e.u] |= 1U << e.v;
        rows[e.v] |= 1U << e.u;
    }
    return rows;
}

/// One representative per isomorphism class, for every order 1..max_n
/// (max_n <= 8), grouped by order.
inline std::vector<std::vector<mainspectra::Graph>> all_graphs_by_order(int max_n) {
    if (max_n < 1 || max_n > 8) throw std::invalid_argument("all_graphs_by_order: 1 <= n <= 8");
    std::vector<std::vector<mainspectra::Graph>> out(static_cast<std::size_t>(max_n) + 1);
    std::vector<Rows> level{Rows{0}};
    out[1].push_back(to_graph(level.front()));
    for (int n = 2; n <= max_n; ++n) {
        std::set<std::uint64_t> seen;
        std::vector<Rows> next;
        for (const auto& rows : level)
            for (std::uint32_t nb = 0; nb < (1U << (n - 1)); ++nb) {
                Rows ext = rows;
                ext.push_back(nb);
                for (int v = 0; v < n - 1; ++v)
                    if ((nb >> v) & 1U) ext[static_cast<std::size_t>(v)] |= 1U << (n - 1);
                if (seen.insert(canonical_code(ext)).second) next.push_back(std::move(ext));
            }
        for (const auto& rows : next) out[static_cast<std::size_t>(n)].push_back(to_graph(rows));
        level = std::move(next);
    }
    return out;
}

inline std::vector<mainspectra::Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<mainspectra::Graph> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(mainspectra::parse_graph6(line));
    return out;
}

}  // namespace testsupport
