#pragma once

// Seidel matrices, switching, strong graphs, regular two-graphs, and
// strongly regular parameters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mainspectra/exact.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/linalg.hpp"
#include "mainspectra/main_spectrum.hpp"

namespace mainspectra {

/// S = J - I - 2A.
inline IntegerMatrix seidel_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    IntegerMatrix s(n, n);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (u != v) s(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = g.adjacent(u, v) ? -1 : 1;
    return s;
}

/// Complements adjacency on every pair separated by (U, V \ U).
inline Graph seidel_switch(const Graph& g, std::span<const int> subset) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int v : subset) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("seidel_switch: vertex " + std::to_string(v) + " out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != (in[static_cast<std::size_t>(u)] != in[static_cast<std::size_t>(v)])) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph seidel_switch(const Graph& g, std::initializer_list<int> subset) {
    return seidel_switch(g, std::span<const int>(subset.begin(), subset.size()));
}

/// Whether S^2 lies in span{S, I, J}. Coefficients come from three probe
/// entries (diagonal, edge, non-edge) and are then checked on every entry.
inline bool is_strong(const Graph& g) {
    const int n = g.order();
    if (n <= 2) return true;
    const auto s = seidel_matrix(g);
    const auto s2 = s * s;
    std::optional<Integer> edge_val, non_edge_val;
    for (int u = 0; u < n && !(edge_val && non_edge_val); ++u)
        for (int v = u + 1; v < n; ++v) {
            auto& slot = g.adjacent(u, v) ? edge_val : non_edge_val;
            if (!slot) slot = s2(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        }
    // S^2 = aS + bI + cJ: diagonal b + c, edges c - a, non-edges c + a. With
    // only one kind of pair S is +-(J - I) and a can be absorbed into b, c.
    Rational a = 0, c = 0;
    if (edge_val && non_edge_val) {
        a = Rational(*non_edge_val - *edge_val) / 2;
        c = Rational(*non_edge_val + *edge_val) / 2;
    } else {
        c = Rational(edge_val ? *edge_val : *non_edge_val);
    }
    const Rational b = Rational(s2(0, 0)) - c;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) {
            const Rational expect = a * s(i, j) + (i == j ? b : Rational(0)) + c;
            if (Rational(s2(i, j)) != expect) return false;
        }
    return true;
}

struct SeidelReport {
    IntegerPolynomial char_poly;
    int distinct_count = 0;
    bool strong = false;
    bool regular_two_graph = false;
    /// Eigenvalue/multiplicity pairs in decreasing order, when the
    /// characteristic polynomial splits over Z.
    std::optional<std::vector<std::pair<Integer, int>>> integer_spectrum;
    /// Ascending floating roots, present when it does not split.
    std::vector<double> float_roots;
};

inline SeidelReport seidel_report(const Graph& g) {
    SeidelReport r;
    const auto s = seidel_matrix(g);
    r.char_poly = char_poly(s);
    r.distinct_count = distinct_root_count(r.char_poly);
    r.strong = is_strong(g);
    r.regular_two_graph = r.distinct_count == 2;

    // |eigenvalue| <= max row sum = n - 1
    auto roots = integer_roots(r.char_poly, g.order());
    int total = 0;
    for (const auto& [root, mult] : roots) total += mult;
    if (total == g.order())
        r.integer_spectrum = std::move(roots);
    else
        r.float_roots = detail::symmetric_eigenvalues(s);

    if (r.regular_two_graph && r.integer_spectrum) {
        const auto& spec = *r.integer_spectrum;
        if (spec[0].first * spec[1].first != -(g.order() - 1))
            throw std::logic_error("seidel_report: regular two-graph eigenvalue product is not -(n-1)");
    }
    return r;
}

struct SrgParams {
    int n = 0;
    int k = 0;
    std::optional<int> lambda;  ///< unset when there are no adjacent pairs
    std::optional<int> mu;      ///< unset when there are no non-adjacent pairs
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

namespace detail {

inline std::optional<SrgParams> common_neighbour_params(const Graph& g) {
    if (!is_regular(g)) return std::nullopt;
    SrgParams p{g.order(), g.degree(0), std::nullopt, std::nullopt};
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            int common = 0;
            const auto ru = g.row(u), rv = g.row(v);
            for (std::size_t w = 0; w < ru.size(); ++w) common += std::popcount(ru[w] & rv[w]);
            auto& slot = g.adjacent(u, v) ? p.lambda : p.mu;
            if (!slot) slot = common;
            else if (*slot != common) return std::nullopt;
        }
    return p;
}

}  // namespace detail

/// Parameters of a connected strongly regular graph, else nullopt.
inline std::optional<SrgParams> srg_params(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    return detail::common_neighbour_params(g);
}

/// Regular with constant common-neighbour counts on adjacent and on
/// non-adjacent pairs; connectivity not required (so mK_a, K_n and empty
/// graphs qualify).
inline bool is_strongly_regular(const Graph& g) { return detail::common_neighbour_params(g).has_value(); }

/// One isolated vertex plus a connected strongly regular graph.
inline bool is_isolated_plus_srg(const Graph& g) {
    const auto comps = components(g);
    if (comps.size() != 2) return false;
    const auto& small = comps[0].size() == 1 ? comps[0] : comps[1];
    const auto& big = comps[0].size() == 1 ? comps[1] : comps[0];
    if (small.size() != 1) return false;
    return srg_params(induced_subgraph(g, big)).has_value();
}

struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonregularStructure {
    Integer seidel0, seidel1;  ///< Seidel eigenvalues, seidel0 > seidel1
    int seidel_mult0 = 0, seidel_mult1 = 0;
    Integer theta0, theta1;  ///< (-1 - seidel_i) / 2
    TwoWalkParams params;
    int distinct_adjacency_count = 0;
    bool char_poly_matches = false;

    bool passed() const { return char_poly_matches && distinct_adjacency_count == 4; }
};

/// For a connected non-regular graph in a regular two-graph: the adjacency
/// characteristic polynomial must equal
/// (x^2 - alpha x - beta)(x - theta0)^(m0-1)(x - theta1)^(m1-1).
/// Throws StructureError when the hypotheses fail.
inline NonregularStructure verify_nonregular_structure(const Graph& g) {
    if (is_regular(g)) throw StructureError("regular graph: check strong regularity instead");
    if (!is_connected(g)) throw StructureError("disconnected graph: check isolated vertex plus SRG instead");
    const auto seidel = seidel_report(g);
    if (!seidel.regular_two_graph || !seidel.integer_spectrum)
        throw StructureError("not in a regular two-graph with integral Seidel spectrum");

    const auto& spec = *seidel.integer_spectrum;
    NonregularStructure out;
    out.seidel0 = spec[0].first;
    out.seidel_mult0 = spec[0].second;
    out.seidel1 = spec[1].first;
    out.seidel_mult1 = spec[1].second;
    for (const Integer* s : {&out.seidel0, &out.seidel1})
        if ((-1 - *s) % 2 != 0) throw StructureError("Seidel eigenvalue " + s->str() + " gives a non-integral theta");
    out.theta0 = (-1 - out.seidel0) / 2;
    out.theta1 = (-1 - out.seidel1) / 2;

    const auto params = two_walk_params(g);
    if (!params) throw StructureError("non-regular member without 2-walk parameters");
    out.params = *params;

    const auto a_poly = char_poly(adjacency_matrix(g));
    out.distinct_adjacency_count = distinct_root_count(a_poly);
    const auto expected = quadratic_factor(out.params) *
                          IntegerPolynomial::linear_factor(out.theta0).pow(static_cast<unsigned>(out.seidel_mult0 - 1)) *
                          IntegerPolynomial::linear_factor(out.theta1).pow(static_cast<unsigned>(out.seidel_mult1 - 1));
    out.char_poly_matches = expected == a_poly;
    return out;
}

}  // namespace mainspectra
