#pragma once

// Generators for graphs with two main eigenvalues: symplectic graphs, cones,
// equitable realizations of small quotient matrices, and the edge splice
// that joins two 2-walk (alpha, beta)-linear graphs into a larger one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mainspectra/equitable.hpp"
#include "mainspectra/exact.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/main_spectrum.hpp"

namespace mainspectra {

/// A generator produced a graph that failed its own post-validation.
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

// Symplectic graphs ----------------------------------------------------------

/// Vertex i is the vector of GF(2)^{2r} whose coordinates, most significant
/// first, are the bits of i; u ~ v iff sum_i u_{2i-1} v_{2i} + u_{2i} v_{2i-1}
/// is odd. Vertex 0 is isolated.
inline Graph symplectic_graph(int r) {
    if (r < 1 || r > 15 || (1 << (2 * r)) > vertex_cap())
        throw std::invalid_argument("symplectic_graph: r=" + std::to_string(r) + " out of range for the vertex cap");
    const int n = 1 << (2 * r);
    // With coordinates paired as bit pairs (2i-1, 2i), the form is the parity
    // of u AND (v with each pair swapped).
    auto swap_pairs = [](unsigned v) { return ((v & 0xAAAAAAAAU) >> 1) | ((v & 0x55555555U) << 1); };
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::popcount(static_cast<unsigned>(u) & swap_pairs(static_cast<unsigned>(v))) & 1) b.add_edge(u, v);
    return std::move(b).build();
}

/// Sp(2r): the symplectic graph without its isolated zero vector.
inline Graph sp_component(int r) {
    const Graph g = symplectic_graph(r);
    std::vector<int> rest;
    for (int v = 1; v < g.order(); ++v) rest.push_back(v);
    return induced_subgraph(g, rest);
}

// Cones and equitable realizations -------------------------------------------

inline Graph cone_over_regular(const Graph& g) {
    if (!is_regular(g)) throw std::invalid_argument("cone_over_regular: input graph is not regular");
    return cone(g);
}

namespace detail {

/// Connection set of a degree-q circulant on n vertices: 1..floor(q/2), plus
/// n/2 when q is odd.
inline std::vector<int> regular_connections(int n, int q) {
    if (q >= n || (q % 2 == 1 && n % 2 == 1))
        throw std::invalid_argument("no " + std::to_string(q) + "-regular circulant on " + std::to_string(n) + " vertices");
    std::vector<int> s;
    for (int i = 1; i <= q / 2; ++i) s.push_back(i);
    if (q % 2 == 1) s.push_back(n / 2);
    return s;
}

inline void add_circulant_block(GraphBuilder& b, int offset, int n, int q) {
    for (int s : regular_connections(n, q))
        for (int v = 0; v < n; ++v) b.add_edge(offset + v, offset + (v + s) % n);
}

/// Smallest block size m with m > q and m*q even.
inline bool circulant_feasible(long long m, long long q) { return m > q && (m * q) % 2 == 0; }

inline std::vector<std::pair<int, int>> valency_classes(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& block : valency_partition(g).blocks)
        out.emplace_back(g.degree(block.front()), static_cast<int>(block.size()));
    return out;
}

}  // namespace detail

/// Connected equitable biregular graph with A d = alpha d + beta j, realizing
/// the quotient [[a', 1], [a'(alpha - a') + beta, alpha - a']], a' = floor(alpha/2).
/// V1 (lower valency) comes first, then V2; V1 vertex i joins V2 vertex
/// floor(i / q21).
inline Graph equitable_biregular_from(long long alpha, long long beta) {
    if (alpha < 0) throw std::invalid_argument("equitable_biregular_from: alpha must be non-negative");
    if (alpha * alpha + 4 * beta == 4)
        throw std::invalid_argument("equitable_biregular_from: alpha^2 + 4 beta = 4 admits no equitable biregular "
                                    "graph (see boundary_impossibility)");
    if (alpha * alpha + 4 * beta < 4)
        throw std::invalid_argument("equitable_biregular_from: alpha^2 + 4 beta must exceed 4");

    const long long q11 = alpha / 2, q22 = alpha - q11, q21 = q11 * q22 + beta;
    long long n2 = 1;
    while (!(detail::circulant_feasible(n2, q22) && detail::circulant_feasible(n2 * q21, q11))) ++n2;
    const long long n1 = n2 * q21;
    if (n1 + n2 > vertex_cap())
        throw std::invalid_argument("equitable_biregular_from: realization needs " + std::to_string(n1 + n2) +
                                    " vertices, above the vertex cap");

    GraphBuilder b(static_cast<int>(n1 + n2));
    detail::add_circulant_block(b, 0, static_cast<int>(n1), static_cast<int>(q11));
    detail::add_circulant_block(b, static_cast<int>(n1), static_cast<int>(n2), static_cast<int>(q22));
    for (long long i = 0; i < n1; ++i) b.add_edge(static_cast<int>(i), static_cast<int>(n1 + i / q21));
    Graph g = std::move(b).build();

    const auto params = two_walk_params(g);
    if (!is_connected(g) || valency_partition(g).size() != 2 || !is_equitable(g, valency_partition(g)) || !params ||
        *params != TwoWalkParams{Rational(alpha), Rational(beta)})
        throw ConstructionError("equitable_biregular_from: realization failed validation for (" +
                                std::to_string(alpha) + "," + std::to_string(beta) + ")");
    return g;
}

struct QuotientCandidate {
    long long q11, q12, q21, q22;
    bool equal_row_sums() const { return q11 + q12 == q21 + q22; }
};

/// Exhaustive list of non-negative integer 2x2 matrices with positive
/// off-diagonal, trace alpha and determinant -beta. On the boundary
/// alpha^2 + 4 beta = 4 every candidate has equal row sums, so none is the
/// quotient of a valency partition with two distinct valencies.
struct BoundaryCertificate {
    long long alpha = 0, beta = 0;
    std::vector<QuotientCandidate> candidates;

    bool impossible() const {
        for (const auto& c : candidates)
            if (!c.equal_row_sums()) return false;
        return true;
    }
};

inline BoundaryCertificate boundary_impossibility(long long alpha, long long beta) {
    if (alpha < 0 || alpha * alpha + 4 * beta != 4)
        throw std::invalid_argument("boundary_impossibility: requires alpha >= 0 and alpha^2 + 4 beta = 4");
    BoundaryCertificate cert{alpha, beta, {}};
    for (long long q11 = 0; q11 <= alpha; ++q11) {
        const long long q22 = alpha - q11, product = q11 * q22 + beta;
        for (long long q12 = 1; q12 <= product; ++q12)
            if (product % q12 == 0) cert.candidates.push_back({q11, q12, product / q12, q22});
    }
    return cert;
}

/// Connected 3-valenced equitable graph with quotient
/// [[c,1,0],[1,c,1],[0,3,c]], c = alpha/2 - 1, so A d = alpha d + (1 - alpha^2/4) j.
/// Blocks of sizes 3m, 3m, m in that order, each a c-regular circulant;
/// block 1 is matched to block 2 and block-2 vertex i joins block-3 vertex floor(i/3).
inline Graph three_valenced_boundary(long long alpha) {
    if (alpha % 2 != 0 || alpha < 4)
        throw std::invalid_argument("three_valenced_boundary: alpha must be even and at least 4");
    const long long c = alpha / 2 - 1;
    long long m = 1;
    while (!detail::circulant_feasible(m, c)) ++m;
    if (7 * m > vertex_cap()) throw std::invalid_argument("three_valenced_boundary: realization exceeds the vertex cap");

    const int big = static_cast<int>(3 * m), small = static_cast<int>(m);
    GraphBuilder b(2 * big + small);
    detail::add_circulant_block(b, 0, big, static_cast<int>(c));
    detail::add_circulant_block(b, big, big, static_cast<int>(c));
    detail::add_circulant_block(b, 2 * big, small, static_cast<int>(c));
    for (int i = 0; i < big; ++i) {
        b.add_edge(i, big + i);
        b.add_edge(big + i, 2 * big + i / 3);
    }
    Graph g = std::move(b).build();

    const auto pi = valency_partition(g);
    const auto params = two_walk_params(g);
    const TwoWalkParams want{Rational(alpha), Rational(1 - alpha * alpha / 4)};
    if (!is_connected(g) || pi.size() != 3 || !is_equitable(g, pi) || !params || *params != want)
        throw ConstructionError("three_valenced_boundary: realization failed validation for alpha=" + std::to_string(alpha));
    return g;
}

// Splicing ---------------------------------------------------------------------

/// Edges e = (x, y) of g and f = (u, v) of h, oriented so that d_x = d_u and d_y = d_v.
struct SpliceSpec {
    Graph g;
    Edge e;
    Graph h;
    Edge f;
};

inline bool is_bridge(const Graph& g, Edge e) {
    return !is_connected(GraphBuilder(g).remove_edge(e.u, e.v).build());
}

/// Disjoint union of g and h (h shifted by |V(g)|) with xy, uv replaced by xv, yu.
/// The result keeps every degree and the 2-walk parameters of the inputs.
inline Graph splice(const SpliceSpec& s) {
    const auto [x, y] = s.e;
    const auto [u, v] = s.f;
    if (x < 0 || y < 0 || x >= s.g.order() || y >= s.g.order() || !s.g.adjacent(x, y))
        throw std::invalid_argument("splice: e is not an edge of G");
    if (u < 0 || v < 0 || u >= s.h.order() || v >= s.h.order() || !s.h.adjacent(u, v))
        throw std::invalid_argument("splice: f is not an edge of H");
    if (s.g.degree(x) != s.h.degree(u) || s.g.degree(y) != s.h.degree(v))
        throw std::invalid_argument("splice: endpoint degrees of e and f do not match");
    if (is_bridge(s.g, s.e)) throw std::invalid_argument("splice: G - e is disconnected");
    if (is_bridge(s.h, s.f)) throw std::invalid_argument("splice: H - f is disconnected");
    const auto pg = two_walk_params(s.g), ph = two_walk_params(s.h);
    if (!pg || !ph) throw std::invalid_argument("splice: inputs must be 2-walk linear");
    if (*pg != *ph) throw std::invalid_argument("splice: G and H have different (alpha, beta)");

    const int off = s.g.order();
    GraphBuilder b(s.g.order() + s.h.order());
    for (const auto& e : s.g.edges()) b.add_edge(e.u, e.v);
    for (const auto& e : s.h.edges()) b.add_edge(off + e.u, off + e.v);
    b.remove_edge(x, y).remove_edge(off + u, off + v);
    b.add_edge(x, off + v).add_edge(y, off + u);
    Graph out = std::move(b).build();

    const auto pl = two_walk_params(out);
    if (!pl || *pl != *pg) throw ConstructionError("splice: result lost the 2-walk parameters");
    return out;
}

struct SpliceChain {
    Graph graph;
    /// designated[i] is the edge of member i+1 spliced to form member i+2,
    /// oriented like the seed edge.
    std::vector<Edge> designated;
};

/// Member k of the family chain_1 = g, chain_{i+1} = splice(chain_i, g).
/// Copies occupy consecutive label ranges. The edge spliced next is the
/// smallest non-bridge edge (p, q) with deg p = d_x, deg q = d_y inside the
/// newest copy, falling back to the cross edge into the newest copy.
inline SpliceChain splice_chain(const Graph& g, Edge e, int k) {
    if (k < 1) throw std::invalid_argument("splice_chain: k must be at least 1");
    const int dx = g.degree(e.u), dy = g.degree(e.v);
    SpliceChain chain{g, {}};
    Edge next = e;
    for (int member = 1; member < k; ++member) {
        chain.designated.push_back(next);
        const int off = chain.graph.order();
        chain.graph = splice({chain.graph, next, g, e});

        std::optional<Edge> pick;
        for (const auto& cand : chain.graph.edges()) {
            if (cand.u < off) continue;
            for (Edge o : {cand, Edge{cand.v, cand.u}})
                if (!pick && chain.graph.degree(o.u) == dx && chain.graph.degree(o.v) == dy && !is_bridge(chain.graph, o))
                    pick = o;
            if (pick) break;
        }
        next = pick.value_or(Edge{next.u, off + e.v});
    }
    return chain;
}

}  // namespace mainspectra
