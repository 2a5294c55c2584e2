#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "mainspectra/census.hpp"
#include "mainspectra/constructions.hpp"
#include "mainspectra/equitable.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/main_spectrum.hpp"
#include "mainspectra/seidel.hpp"

using namespace mainspectra;

namespace {

TwoWalkParams params(long long a, long long b) { return {Rational(a), Rational(b)}; }

std::vector<std::pair<int, int>> valencies(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& block : valency_partition(g).blocks) out.emplace_back(g.degree(block.front()), static_cast<int>(block.size()));
    return out;
}

}  // namespace

TEST_CASE("symplectic graphs", "[constructions]") {
    const auto s1 = symplectic_graph(1);
    CHECK(s1.order() == 4);
    CHECK(s1.degree(0) == 0);
    CHECK(sp_component(1) == complete_graph(3));
    CHECK(srg_params(sp_component(1)) == SrgParams{3, 2, 1, std::nullopt});

    const auto s2 = symplectic_graph(2);
    CHECK(s2.order() == 16);
    CHECK(s2.degree(0) == 0);
    CHECK(srg_params(sp_component(2)) == SrgParams{15, 8, 4, 4});
    CHECK(srg_params(sp_component(3)) == SrgParams{63, 32, 16, 16});

    CHECK_THROWS_AS(symplectic_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(symplectic_graph(4), std::invalid_argument);  // 256 vertices, above the default cap
}

TEST_CASE("symplectic form matches the coordinate definition", "[constructions]") {
    // coordinates u_1..u_4 are the bits of the label, most significant first
    const auto g = symplectic_graph(2);
    auto coord = [](int x, int i) { return (x >> (4 - i)) & 1; };
    for (int u = 0; u < 16; ++u)
        for (int v = 0; v < 16; ++v) {
            if (u == v) continue;
            const int form = (coord(u, 1) * coord(v, 2) + coord(u, 2) * coord(v, 1) + coord(u, 3) * coord(v, 4) +
                              coord(u, 4) * coord(v, 3)) % 2;
            CHECK(g.adjacent(u, v) == (form == 1));
        }
}

TEST_CASE("cones over regular graphs", "[constructions]") {
    const auto c4 = cone_over_regular(cycle_graph(4));
    CHECK(two_walk_params(c4) == params(2, 4));
    CHECK(main_values(*two_walk_params(c4)).mu0_exact() == "1+sqrt(5)");

    const auto k5 = cone_over_regular(complete_graph(4));
    CHECK(k5 == complete_graph(5));
    CHECK(harmonic_delta(k5) == Rational(4));

    const auto two_k2 = graph_from_edges(4, {{0, 1}, {2, 3}});
    CHECK(two_walk_params(cone_over_regular(two_k2)) == params(1, 4));

    CHECK_THROWS_AS(cone_over_regular(path_graph(3)), std::invalid_argument);

    // k-regular on n vertices with n != k + 1: equitable biregular
    for (int n = 4; n <= 10; ++n)
        for (const auto& g : {cycle_graph(n), circulant(n, {1, n / 2})}) {
            if (g.degree(0) + 1 == n) continue;
            const auto c = cone_over_regular(g);
            const auto pi = valency_partition(c);
            CHECK(pi.size() == 2);
            CHECK(is_equitable(c, pi));
            CHECK(main_eigenvalue_count(c) == 2);
            const long long k = g.degree(0);
            const auto p = *two_walk_params(c);
            CHECK(p.alpha * (k + 1) + p.beta == Rational(n + k * (k + 1)));
            CHECK(p.alpha * n + p.beta == Rational(n * (k + 1)));
        }
}

TEST_CASE("equitable biregular realizations", "[constructions]") {
    const auto p4 = equitable_biregular_from(1, 1);
    CHECK(p4.order() == 4);
    CHECK(two_walk_params(p4) == params(1, 1));
    CHECK(valencies(p4) == std::vector<std::pair<int, int>>{{1, 2}, {2, 2}});

    for (long long b = 2; b <= 7; ++b) {
        const auto s = equitable_biregular_from(0, b);
        CHECK(s.order() == b + 1);
        CHECK(s.degree(static_cast<int>(b)) == b);
        CHECK(two_walk_params(s) == params(0, b));
    }

    const auto g = equitable_biregular_from(8, -9);
    CHECK(two_walk_params(g) == params(8, -9));
    CHECK(valency_partition(g).size() == 2);
    CHECK(g.degree(0) == 5);
    CHECK(g.degree(g.order() - 1) == 11);

    CHECK_THROWS_AS(equitable_biregular_from(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(equitable_biregular_from(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(equitable_biregular_from(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(equitable_biregular_from(-1, 5), std::invalid_argument);
}

TEST_CASE("equitable biregular sweep", "[constructions][property]") {
    int built = 0;
    for (long long a = 0; a <= 10; ++a)
        for (long long b = -30; b <= 20; ++b) {
            const long long disc = a * a + 4 * b;
            if (disc < 5 || disc > 60) continue;
            const auto g = equitable_biregular_from(a, b);
            CHECK(is_connected(g));
            const auto pi = valency_partition(g);
            CHECK(pi.size() == 2);
            CHECK(is_equitable(g, pi));
            CHECK(two_walk_params(g) == params(a, b));
            ++built;
        }
    CHECK(built > 50);
}

TEST_CASE("boundary certificates", "[constructions]") {
    const auto c = boundary_impossibility(2, 0);
    CHECK(c.impossible());
    REQUIRE_FALSE(c.candidates.empty());
    bool has_forced = false;
    for (const auto& q : c.candidates) {
        CHECK(q.q11 + q.q22 == 2);
        CHECK(q.q11 * q.q22 - q.q12 * q.q21 == 0);
        if (q.q11 == 1 && q.q12 == 1 && q.q21 == 1 && q.q22 == 1) has_forced = true;
    }
    CHECK(has_forced);

    const auto c4 = boundary_impossibility(4, -3);
    CHECK(c4.impossible());
    CHECK(std::any_of(c4.candidates.begin(), c4.candidates.end(),
                      [](const auto& q) { return q.q11 == 2 && q.q12 == 1 && q.q21 == 1 && q.q22 == 2; }));

    CHECK_THROWS_AS(boundary_impossibility(2, 1), std::invalid_argument);
    for (long long a = 0; a <= 20; a += 2) CHECK(boundary_impossibility(a, 1 - a * a / 4).impossible());
}

TEST_CASE("three-valenced boundary graphs", "[constructions]") {
    for (long long a = 4; a <= 12; a += 2) {
        const auto g = three_valenced_boundary(a);
        const auto pi = valency_partition(g);
        CHECK(pi.size() == 3);
        CHECK(is_equitable(g, pi));
        CHECK(is_connected(g));
        CHECK(two_walk_params(g) == params(a, 1 - a * a / 4));
    }
    const auto g4 = three_valenced_boundary(4);
    const int m = g4.order() / 7;
    std::vector<int> b1(3 * m), b2(3 * m), b3(m);
    std::iota(b1.begin(), b1.end(), 0);
    std::iota(b2.begin(), b2.end(), 3 * m);
    std::iota(b3.begin(), b3.end(), 6 * m);
    const auto q = quotient_matrix(g4, Partition{{b1, b2, b3}});
    CHECK(q.entries == RationalMatrix{{1, 1, 0}, {1, 1, 1}, {0, 3, 1}});
    CHECK_THROWS_AS(three_valenced_boundary(2), std::invalid_argument);
    CHECK_THROWS_AS(three_valenced_boundary(5), std::invalid_argument);
}

TEST_CASE("splice", "[constructions]") {
    const auto c = cone(cycle_graph(4));
    const Edge hub_rim{4, 0};
    const auto l = splice({c, hub_rim, c, hub_rim});
    CHECK(l.order() == 10);
    CHECK(two_walk_params(l) == params(2, 4));
    CHECK(is_connected(l));
    auto d = degree_vector(l), expect = degree_vector(c);
    expect.insert(expect.end(), expect.begin(), expect.end());
    CHECK(d == expect);
    CHECK(main_eigenvalue_count(l) == 2);

    const auto star = star_graph(3);
    CHECK_THROWS_AS(splice({star, {0, 1}, star, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(splice({c, {0, 2}, c, hub_rim}), std::invalid_argument);     // not an edge
    CHECK_THROWS_AS(splice({c, {0, 1}, c, hub_rim}), std::invalid_argument);     // degree mismatch
    CHECK_THROWS_AS(splice({c, hub_rim, t_lambda_tree(2), {0, 1}}), std::invalid_argument);
}

TEST_CASE("splice preserves harmonicity", "[constructions]") {
    for (long long a : {3, 4, 5}) {
        const auto g = equitable_biregular_from(a, 0);
        REQUIRE(harmonic_delta(g) == Rational(a));
        std::optional<Edge> e;
        for (const auto& cand : g.edges())
            if (!is_bridge(g, cand)) {
                e = cand;
                break;
            }
        REQUIRE(e);
        const auto h = splice({g, *e, g, *e});
        CHECK(h.order() == 2 * g.order());
        CHECK(is_connected(h));
        CHECK(harmonic_delta(h) == Rational(a));
    }
}

TEST_CASE("splice chains", "[constructions]") {
    const auto c = cone(cycle_graph(4));
    const Edge hub_rim{4, 0};
    CHECK(splice_chain(c, hub_rim, 1).graph == c);
    CHECK_THROWS_AS(splice_chain(c, hub_rim, 0), std::invalid_argument);

    const auto three = splice_chain(c, hub_rim, 3);
    CHECK(three.graph.order() == 15);
    CHECK(two_walk_params(three.graph) == params(2, 4));
    CHECK(three.designated.size() == 2);

    int previous = -1;
    for (int k = 1; k <= 5; ++k) {
        const auto chain = splice_chain(c, hub_rim, k);
        CHECK(two_walk_params(chain.graph) == params(2, 4));
        const auto d = degree_vector(chain.graph);
        CHECK(*std::max_element(d.begin(), d.end()) == 4);
        const auto diam = diameter(chain.graph);
        REQUIRE(diam);
        CHECK(*diam > previous);
        previous = *diam;
    }
}

TEST_CASE("splice of two non-isomorphic (8,-9) census members", "[constructions]") {
    const auto base = symplectic_graph(2);
    std::optional<Graph> a, b;
    for (std::uint64_t i = 1; i < 32768 && !(a && b); ++i) {
        const auto m = switching_member(base, i << 1);
        const auto p = two_walk_params(m);
        if (!p || *p != params(8, -9)) continue;
        const auto v = valencies(m);
        if (v.front().first == 3 && !a) a = m;
        if (v.front().first == 5 && !b) b = m;
    }
    REQUIRE(a);
    REQUIRE(b);
    // find edges with matching degree pairs (d_x, d_y)
    std::optional<SpliceSpec> spec;
    for (const auto& e : a->edges()) {
        if (spec) break;
        for (Edge ea : {e, Edge{e.v, e.u}}) {
            if (spec || is_bridge(*a, ea)) continue;
            for (const auto& f : b->edges()) {
                bool done = false;
                for (Edge fb : {f, Edge{f.v, f.u}})
                    if (a->degree(ea.u) == b->degree(fb.u) && a->degree(ea.v) == b->degree(fb.v) && !is_bridge(*b, fb)) {
                        spec = SpliceSpec{*a, ea, *b, fb};
                        done = true;
                        break;
                    }
                if (done) break;
            }
        }
    }
    REQUIRE(spec);
    const auto l = splice(*spec);
    CHECK(l.order() == 32);
    CHECK(two_walk_params(l) == params(8, -9));
}
