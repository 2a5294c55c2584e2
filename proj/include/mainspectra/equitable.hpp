#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mainspectra/exact.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/linalg.hpp"

namespace mainspectra {

/// Ordered list of disjoint, nonempty, sorted vertex blocks covering V.
struct Partition {
    std::vector<std::vector<int>> blocks;

    std::size_t size() const { return blocks.size(); }
    friend bool operator==(const Partition&, const Partition&) = default;
};

struct QuotientMatrix {
    RationalMatrix entries;
    std::vector<std::size_t> block_sizes;

    bool integral() const {
        for (std::size_t i = 0; i < entries.rows(); ++i)
            for (std::size_t j = 0; j < entries.cols(); ++j)
                if (!is_integral(entries(i, j))) return false;
        return true;
    }
};

/// Throws std::invalid_argument unless p is a partition of g's vertices.
inline void validate_partition(const Graph& g, const Partition& p) {
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    for (const auto& block : p.blocks) {
        if (block.empty()) throw std::invalid_argument("partition: empty block");
        for (int v : block) {
            if (v < 0 || v >= g.order()) throw std::invalid_argument("partition: vertex " + std::to_string(v) + " out of range");
            if (seen[static_cast<std::size_t>(v)]++) throw std::invalid_argument("partition: vertex " + std::to_string(v) + " repeated");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw std::invalid_argument("partition: blocks do not cover V");
}

inline Partition single_block(const Graph& g) {
    Partition p;
    p.blocks.emplace_back();
    for (int v = 0; v < g.order(); ++v) p.blocks.back().push_back(v);
    return p;
}

/// Degree classes in increasing order of valency.
inline Partition valency_partition(const Graph& g) {
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < g.order(); ++v) by_degree[g.degree(v)].push_back(v);
    Partition p;
    for (auto& [deg, block] : by_degree) p.blocks.push_back(std::move(block));
    return p;
}

namespace detail {

inline std::vector<int> block_index(const Graph& g, const Partition& p) {
    std::vector<int> idx(static_cast<std::size_t>(g.order()));
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (int v : p.blocks[b]) idx[static_cast<std::size_t>(v)] = static_cast<int>(b);
    return idx;
}

/// Row v: number of neighbours of v in each block.
inline std::vector<std::vector<int>> block_counts(const Graph& g, const Partition& p) {
    const auto idx = block_index(g, p);
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(g.order()), std::vector<int>(p.size(), 0));
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) ++counts[static_cast<std::size_t>(v)][static_cast<std::size_t>(idx[static_cast<std::size_t>(w)])];
    return counts;
}

}  // namespace detail

inline bool is_equitable(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    const auto counts = detail::block_counts(g, p);
    for (const auto& block : p.blocks)
        for (int v : block)
            if (counts[static_cast<std::size_t>(v)] != counts[static_cast<std::size_t>(block.front())]) return false;
    return true;
}

/// Coarsest equitable refinement. Each round splits every block by the
/// vertices' neighbour-count signatures; sub-blocks replace their parent in
/// place, ordered by smallest member.
inline Partition refine_to_equitable(const Graph& g, Partition p) {
    validate_partition(g, p);
    for (auto& block : p.blocks) std::sort(block.begin(), block.end());
    for (;;) {
        const auto counts = detail::block_counts(g, p);
        Partition next;
        for (const auto& block : p.blocks) {
            std::vector<std::vector<int>> parts;
            std::map<std::vector<int>, std::size_t> slot;
            for (int v : block) {
                auto [it, fresh] = slot.try_emplace(counts[static_cast<std::size_t>(v)], parts.size());
                if (fresh) parts.emplace_back();
                parts[it->second].push_back(v);
            }
            for (auto& part : parts) next.blocks.push_back(std::move(part));
        }
        if (next.size() == p.size()) return next;
        p = std::move(next);
    }
}

/// b_ij = average number of neighbours in block j over vertices of block i.
inline QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    const auto counts = detail::block_counts(g, p);
    QuotientMatrix q{RationalMatrix(p.size(), p.size()), {}};
    for (std::size_t i = 0; i < p.size(); ++i) {
        q.block_sizes.push_back(p.blocks[i].size());
        for (std::size_t j = 0; j < p.size(); ++j) {
            long long total = 0;
            for (int v : p.blocks[i]) total += counts[static_cast<std::size_t>(v)][j];
            q.entries(i, j) = make_rational(total, static_cast<long long>(p.blocks[i].size()));
        }
    }
    return q;
}

/// Distinct eigenvalues of the quotient of an equitable partition; an upper
/// bound on the number of main eigenvalues.
inline int main_bound(const Graph& g, const Partition& p) {
    if (!is_equitable(g, p)) throw std::invalid_argument("main_bound: partition is not equitable");
    const auto q = quotient_matrix(g, p);
    IntegerMatrix m(q.entries.rows(), q.entries.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = numerator(q.entries(i, j));
    return distinct_root_count(char_poly(m));
}

}  // namespace mainspectra
