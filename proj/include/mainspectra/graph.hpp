#pragma once

// Simple undirected graphs on dense vertex labels 0..n-1, stored as
// adjacency bit rows. Graph values are immutable; GraphBuilder is the only
// way to produce one.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mainspectra {

/// Largest accepted vertex count: 128 unless MAINSPECTRA_VERTEX_CAP says otherwise.
inline int vertex_cap() {
    constexpr int default_cap = 128;
    if (const char* env = std::getenv("MAINSPECTRA_VERTEX_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1'000'000) return static_cast<int>(v);
    }
    return default_cap;
}

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphBuilder;

class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    std::size_t size() const {
        std::size_t twice = 0;
        for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
        return twice / 2;
    }

    bool adjacent(int u, int v) const {
        return (row(u)[static_cast<std::size_t>(v) / 64] >> (static_cast<unsigned>(v) % 64)) & 1U;
    }
    int degree(int v) const {
        int d = 0;
        for (auto w : row(v)) d += std::popcount(w);
        return d;
    }
    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        const auto r = row(v);
        for (std::size_t w = 0; w < r.size(); ++w)
            for (std::uint64_t bits = r[w]; bits; bits &= bits - 1)
                out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        return out;
    }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.push_back({u, v});
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n) {
        if (n < 1 || n > vertex_cap())
            throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, " +
                                        std::to_string(vertex_cap()) + "]");
        g_.n_ = n;
        g_.words_ = (static_cast<std::size_t>(n) + 63) / 64;
        g_.bits_.assign(g_.words_ * static_cast<std::size_t>(n), 0);
    }
    explicit GraphBuilder(const Graph& base) : g_(base) {}

    int order() const { return g_.n_; }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }

    GraphBuilder& add_edge(int u, int v) {
        check(u, v);
        set(u, v, true);
        return *this;
    }
    GraphBuilder& remove_edge(int u, int v) {
        check(u, v);
        set(u, v, false);
        return *this;
    }
    GraphBuilder& toggle_edge(int u, int v) {
        check(u, v);
        set(u, v, !g_.adjacent(u, v));
        return *this;
    }

    Graph build() const& { return g_; }
    Graph build() && { return std::move(g_); }

private:
    void check(int u, int v) const {
        if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
            throw std::out_of_range("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " has an endpoint outside 0.." + std::to_string(g_.n_ - 1));
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
    void set(int u, int v, bool on) {
        auto bit = [&](int a, int b) -> std::uint64_t& {
            return g_.bits_[static_cast<std::size_t>(a) * g_.words_ + static_cast<std::size_t>(b) / 64];
        };
        const std::uint64_t mu = std::uint64_t{1} << (static_cast<unsigned>(v) % 64);
        const std::uint64_t mv = std::uint64_t{1} << (static_cast<unsigned>(u) % 64);
        if (on) {
            bit(u, v) |= mu;
            bit(v, u) |= mv;
        } else {
            bit(u, v) &= ~mu;
            bit(v, u) &= ~mv;
        }
    }

    Graph g_;
};

/// Duplicate edges collapse; loops and out-of-range endpoints throw.
inline Graph graph_from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (const auto& e : edges) b.add_edge(e.u, e.v);
    return std::move(b).build();
}

inline Graph graph_from_edges(int n, std::initializer_list<Edge> edges) {
    return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline std::vector<int> degree_vector(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    return d;
}

inline bool is_regular(const Graph& g) {
    const auto d = degree_vector(g);
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

/// BFS distances from source; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] >= 0) continue;
            dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

/// Maximum eccentricity; nullopt stands for infinite (disconnected).
inline std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        for (int d : bfs_distances(g, s)) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const auto dist = bfs_distances(g, s);
        out.emplace_back();
        for (int v = 0; v < g.order(); ++v)
            if (dist[static_cast<std::size_t>(v)] >= 0) {
                comp[static_cast<std::size_t>(v)] = static_cast<int>(out.size() - 1);
                out.back().push_back(v);
            }
    }
    return out;
}

inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    GraphBuilder b(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return std::move(b).build();
}

/// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
    if (perm.size() != static_cast<std::size_t>(g.order())) throw std::invalid_argument("relabel: size mismatch");
    GraphBuilder b(g.order());
    for (const auto& e : g.edges()) b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return std::move(b).build();
}

/// Vertices of h follow those of g.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    GraphBuilder b(g.order() + h.order());
    for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
    for (const auto& e : h.edges()) b.add_edge(g.order() + e.u, g.order() + e.v);
    return std::move(b).build();
}

// Builders ------------------------------------------------------------------

inline Graph empty_graph(int n) { return GraphBuilder(n).build(); }

inline Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

/// K_{1,leaves}: centre 0, leaves 1..leaves.
inline Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star_graph: need at least one leaf");
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return std::move(b).build();
}

/// Vertex i adjacent to i +- s (mod n) for every s in the connection set,
/// each s in 1..floor(n/2).
inline Graph circulant(int n, std::span<const int> connections) {
    GraphBuilder b(n);
    for (int s : connections) {
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("circulant: connection " + std::to_string(s) + " outside 1.." +
                                        std::to_string(n / 2));
        for (int v = 0; v < n; ++v) b.add_edge(v, (v + s) % n);
    }
    return std::move(b).build();
}

inline Graph circulant(int n, std::initializer_list<int> connections) {
    return circulant(n, std::span<const int>(connections.begin(), connections.size()));
}

/// The harmonic tree T_lambda: centre 0 of valency lambda^2 - lambda + 1,
/// each centre neighbour carrying lambda - 1 pendant leaves.
inline Graph t_lambda_tree(int lambda) {
    if (lambda < 2) throw std::invalid_argument("t_lambda_tree: lambda must be at least 2");
    const int middles = lambda * lambda - lambda + 1;
    GraphBuilder b(1 + middles * lambda);
    int next = 1 + middles;
    for (int m = 1; m <= middles; ++m) {
        b.add_edge(0, m);
        for (int l = 0; l < lambda - 1; ++l) b.add_edge(m, next++);
    }
    return std::move(b).build();
}

/// Adds a hub (label n) adjacent to every vertex of g.
inline Graph cone(const Graph& g) {
    GraphBuilder b(g.order() + 1);
    for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
    for (int v = 0; v < g.order(); ++v) b.add_edge(v, g.order());
    return std::move(b).build();
}

}  // namespace mainspectra
