#include <catch_amalgamated.hpp>

#include <random>

#include "mainspectra/constructions.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/seidel.hpp"
#include "support/small_graphs.hpp"

using namespace mainspectra;

namespace {

std::vector<int> random_subset(std::mt19937& rng, int n) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (rng() % 2) s.push_back(v);
    return s;
}

Graph random_graph(std::mt19937& rng, int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 2) b.add_edge(u, v);
    return std::move(b).build();
}

}  // namespace

TEST_CASE("Seidel matrices", "[seidel]") {
    CHECK(seidel_matrix(complete_graph(2)) == IntegerMatrix{{0, -1}, {-1, 0}});
    CHECK(seidel_matrix(empty_graph(3)) == IntegerMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(seidel_matrix(complete_graph(3)) == IntegerMatrix{{0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}});
}

TEST_CASE("switching", "[seidel]") {
    const auto g = path_graph(5);
    CHECK(seidel_switch(g, {}) == g);
    CHECK(seidel_switch(g, {0, 1, 2, 3, 4}) == g);
    CHECK(seidel_switch(complete_graph(2), {0}) == empty_graph(2));
    CHECK_THROWS_AS(seidel_switch(g, {5}), std::out_of_range);

    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        const auto h = random_graph(rng, n);
        const auto u = random_subset(rng, n);
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (std::find(u.begin(), u.end(), v) == u.end()) rest.push_back(v);
        const auto s = seidel_switch(h, u);
        CHECK(seidel_switch(s, u) == h);
        CHECK(seidel_switch(h, rest) == s);
        CHECK(char_poly(seidel_matrix(s)) == char_poly(seidel_matrix(h)));
    }
}

TEST_CASE("strong graphs", "[seidel]") {
    CHECK(is_strong(cycle_graph(5)));
    for (int n = 1; n <= 6; ++n) CHECK(is_strong(complete_graph(n)));
    CHECK(is_strong(empty_graph(4)));
    CHECK_FALSE(is_strong(path_graph(5)));
    CHECK_FALSE(is_strong(path_graph(4)));
}

TEST_CASE("Seidel reports", "[seidel]") {
    const auto c5 = seidel_report(cycle_graph(5));
    CHECK(c5.char_poly == IntegerPolynomial({0, 25, 0, -10, 0, 1}));
    CHECK(c5.distinct_count == 3);
    CHECK(c5.strong);
    CHECK_FALSE(c5.regular_two_graph);
    CHECK_FALSE(c5.integer_spectrum);
    CHECK(c5.float_roots.size() == 5);

    const auto p4 = seidel_report(path_graph(4));
    CHECK(p4.char_poly == IntegerPolynomial({5, 0, -6, 0, 1}));
    CHECK(p4.distinct_count == 4);
    CHECK_FALSE(p4.strong);
    CHECK_FALSE(p4.regular_two_graph);

    const auto p5 = seidel_report(path_graph(5));
    CHECK(p5.char_poly == IntegerPolynomial({-12, 17, 4, -10, 0, 1}));
    CHECK_FALSE(p5.strong);

    const auto sp = seidel_report(symplectic_graph(2));
    CHECK(sp.regular_two_graph);
    CHECK(sp.strong);
    REQUIRE(sp.integer_spectrum);
    CHECK(*sp.integer_spectrum == std::vector<std::pair<Integer, int>>{{3, 10}, {-5, 6}});

    const auto k1 = seidel_report(complete_graph(1));
    CHECK(k1.distinct_count == 1);
}

TEST_CASE("strongly regular parameters", "[seidel]") {
    CHECK(srg_params(cycle_graph(5)) == SrgParams{5, 2, 0, 1});
    CHECK(srg_params(sp_component(2)) == SrgParams{15, 8, 4, 4});
    CHECK_FALSE(srg_params(path_graph(4)));
    CHECK_FALSE(srg_params(cycle_graph(6)));
    CHECK(srg_params(complete_graph(3)) == SrgParams{3, 2, 1, std::nullopt});
    CHECK_FALSE(srg_params(disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK(is_strongly_regular(disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK(is_isolated_plus_srg(symplectic_graph(2)));
    CHECK_FALSE(is_isolated_plus_srg(sp_component(2)));
}

TEST_CASE("regular two-graphs have Seidel eigenvalue product -(n-1)", "[seidel]") {
    for (int r = 1; r <= 2; ++r) {
        const auto s = seidel_report(symplectic_graph(r));
        REQUIRE(s.integer_spectrum);
        const auto& spec = *s.integer_spectrum;
        if (s.regular_two_graph) CHECK(spec[0].first * spec[1].first == -(symplectic_graph(r).order() - 1));
    }
    const auto c5 = seidel_report(complete_graph(5));
    CHECK(c5.regular_two_graph);
    CHECK(c5.integer_spectrum->front().first * c5.integer_spectrum->back().first == -4);
}

TEST_CASE("strong iff strongly regular or two Seidel eigenvalues, all graphs up to 7 vertices", "[seidel][property]") {
    const auto corpus = testsupport::all_graphs_by_order(7);
    int mismatches = 0, strong = 0;
    for (const auto& level : corpus)
        for (const auto& g : level) {
            const auto s = seidel_report(g);
            const bool expect = is_strongly_regular(g) || s.distinct_count == 2;
            if (s.strong != expect) ++mismatches;
            strong += s.strong;
            if (s.regular_two_graph) CHECK(s.strong);
        }
    CHECK(mismatches == 0);
    CHECK(strong > 0);
}

TEST_CASE("disconnected strongly regular graphs are strong", "[seidel]") {
    // 3K2: three Seidel eigenvalues, no connected SRG parameters
    const auto g = disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)), complete_graph(2));
    CHECK(is_strong(g));
    CHECK_FALSE(srg_params(g));
    CHECK(is_strongly_regular(g));
    CHECK(seidel_report(g).distinct_count == 3);
}

TEST_CASE("non-regular structure in the symplectic class", "[seidel]") {
    const auto base = symplectic_graph(2);
    // switching with respect to {1} gives a non-regular connected member
    const auto g = seidel_switch(base, {1});
    const auto st = verify_nonregular_structure(g);
    CHECK(st.passed());
    CHECK(st.theta0 == -2);
    CHECK(st.theta1 == 2);
    CHECK(st.seidel_mult0 == 10);
    CHECK(st.seidel_mult1 == 6);
    CHECK(st.distinct_adjacency_count == 4);

    CHECK_THROWS_AS(verify_nonregular_structure(base), StructureError);  // disconnected
    std::optional<Graph> regular;
    for (std::uint32_t mask = 2; !regular; mask += 2) {
        std::vector<int> set;
        for (int v = 0; v < 16; ++v)
            if ((mask >> v) & 1U) set.push_back(v);
        const auto m = seidel_switch(base, set);
        if (is_regular(m)) regular = m;
    }
    CHECK(srg_params(*regular).has_value());
    CHECK_THROWS_AS(verify_nonregular_structure(*regular), StructureError);
    CHECK_THROWS_AS(verify_nonregular_structure(path_graph(4)), StructureError);     // not a regular two-graph
}
