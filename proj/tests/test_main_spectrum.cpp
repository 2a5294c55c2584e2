#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mainspectra/constructions.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/graph6.hpp"
#include "mainspectra/main_spectrum.hpp"
#include "support/small_graphs.hpp"
#include "support/vertex_cap.hpp"

using namespace mainspectra;

namespace {

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

TwoWalkParams params(long long a, long long b) { return {Rational(a), Rational(b)}; }

}  // namespace

TEST_CASE("walk matrices", "[main]") {
    const auto w = walk_matrix(path_graph(3));
    CHECK(w == IntegerMatrix{{1, 1, 2}, {1, 2, 2}, {1, 1, 2}});
    CHECK(walk_matrix(cycle_graph(4)) == IntegerMatrix{{1, 2, 4, 8}, {1, 2, 4, 8}, {1, 2, 4, 8}, {1, 2, 4, 8}});
    CHECK(walk_matrix(complete_graph(1)) == IntegerMatrix{{1}});
}

TEST_CASE("main eigenvalue counts", "[main]") {
    CHECK(main_eigenvalue_count(cycle_graph(5)) == 1);
    CHECK(main_eigenvalue_count(petersen()) == 1);
    CHECK(main_eigenvalue_count(path_graph(3)) == 2);
    CHECK(main_eigenvalue_count(t_lambda_tree(2)) == 2);
    CHECK(main_eigenvalue_count(complete_graph(1)) == 1);
    CHECK(main_eigenvalue_count(empty_graph(4)) == 1);
}

TEST_CASE("early-stopped count equals the full walk-matrix rank", "[main][property]") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) b.add_edge(u, v);
        const auto g = std::move(b).build();
        CHECK(main_eigenvalue_count(g) == static_cast<int>(rank_exact(walk_matrix(g))));
        CHECK(main_eigenvalue_count(g) <= distinct_root_count(char_poly(adjacency_matrix(g))));
    }
}

TEST_CASE("two-walk parameters", "[main]") {
    CHECK(two_walk_params(star_graph(3)) == params(0, 3));
    CHECK(two_walk_params(path_graph(4)) == params(1, 1));
    CHECK_FALSE(two_walk_params(cycle_graph(6)));
    CHECK_FALSE(two_walk_params(path_graph(5)));
    CHECK(two_walk_params(cone(cycle_graph(4))) == params(2, 4));
    CHECK(two_walk_params(t_lambda_tree(2)) == params(2, 0));
}

TEST_CASE("main values", "[main]") {
    const auto q = main_values(params(0, 3));
    CHECK(q.mu0() == Catch::Approx(std::sqrt(3.0)).margin(1e-12));
    CHECK(q.mu1() == Catch::Approx(-std::sqrt(3.0)).margin(1e-12));
    CHECK(q.mu0_exact() == "sqrt(3)");
    CHECK(q.mu1_exact() == "-sqrt(3)");

    const auto h = main_values(params(8, 0));
    CHECK(h.mu0_exact() == "8");
    CHECK(h.mu1_exact() == "0");

    const auto c = main_values(params(2, 4));
    CHECK(c.mu0_exact() == "1+sqrt(5)");
    CHECK(c.mu1_exact() == "1-sqrt(5)");
    CHECK(c.mu0() == Catch::Approx(1 + std::sqrt(5.0)).margin(1e-12));

    CHECK(main_values(params(8, -9)).mu0_exact() == "4+sqrt(7)");
    CHECK(main_values(params(1, 1)).mu0_exact() == "1/2+sqrt(5/4)");
    CHECK_THROWS_AS(main_values(params(2, -1)), std::domain_error);
    CHECK_THROWS_AS(main_values(params(0, 0)), std::domain_error);

    for (long long a = 0; a <= 6; ++a)
        for (long long b = -5; b <= 6; ++b) {
            if (a * a + 4 * b <= 0) continue;
            const auto m = main_values(params(a, b));
            CHECK(m.mu0() + m.mu1() == Catch::Approx(static_cast<double>(a)).margin(1e-9));
            CHECK(m.mu0() * m.mu1() == Catch::Approx(static_cast<double>(-b)).margin(1e-9));
            CHECK(m.mu0() >= m.mu1());
        }
}

TEST_CASE("harmonic delta", "[main]") {
    CHECK(harmonic_delta(t_lambda_tree(2)) == Rational(2));
    CHECK(harmonic_delta(t_lambda_tree(3)) == Rational(3));
    CHECK_FALSE(harmonic_delta(path_graph(4)));
    CHECK(harmonic_delta(cycle_graph(7)) == Rational(2));
    CHECK(harmonic_delta(empty_graph(3)) == Rational(0));
}

TEST_CASE("existence check", "[main]") {
    CHECK_FALSE(existence_check(0, 1));
    CHECK(existence_check(2, 0));
    CHECK_FALSE(existence_check(1, 0));
    CHECK(existence_check(0, 2));
    CHECK(existence_check(8, -9));
    CHECK_THROWS_AS(existence_check(-1, 3), std::invalid_argument);
}

TEST_CASE("analyze", "[main]") {
    const auto t2 = analyze(t_lambda_tree(2));
    CHECK(t2.main_count == 2);
    CHECK(t2.two_walk == params(2, 0));
    CHECK(t2.harmonic_delta == Rational(2));
    REQUIRE(t2.main_values);
    CHECK(t2.main_values->mu0_exact() == "2");
    CHECK(t2.main_values->mu1_exact() == "0");
    CHECK(t2.spectral_radius == Catch::Approx(2.0).margin(1e-9));

    const auto c = analyze(cone(cycle_graph(4)));
    CHECK(c.main_count == 2);
    CHECK(c.two_walk == params(2, 4));
    CHECK(c.main_values->mu0_exact() == "1+sqrt(5)");
    CHECK_FALSE(c.harmonic_delta);

    const auto c5 = analyze(cycle_graph(5));
    CHECK(c5.main_count == 1);
    CHECK(c5.regular);
    CHECK_FALSE(c5.two_walk);
    CHECK_FALSE(c5.main_values);

    const auto dis = analyze(disjoint_union(cycle_graph(3), path_graph(2)));
    CHECK_FALSE(dis.connected);
    CHECK(dis.main_count == 2);
}

TEST_CASE("T_lambda trees are lambda-harmonic with main values rho and 0", "[main]") {
    const testsupport::ScopedVertexCap cap(256);
    for (int lambda = 2; lambda <= 6; ++lambda) {
        const auto r = analyze(t_lambda_tree(lambda));
        CHECK(r.harmonic_delta == Rational(lambda));
        CHECK(r.two_walk == params(lambda, 0));
        REQUIRE(r.main_values);
        CHECK(r.main_values->mu0() == Catch::Approx(r.spectral_radius).margin(1e-9));
        CHECK(r.main_values->mu1_exact() == "0");
    }
}

TEST_CASE("main-spectrum invariants over all graphs up to 7 vertices", "[main][property]") {
    const auto corpus = testsupport::all_graphs_by_order(7);
    int checked = 0;
    for (const auto& level : corpus)
        for (const auto& g : level) {
            const auto r = analyze(g);
            if (r.connected) CHECK((r.main_count == 1) == r.regular);
            CHECK(r.two_walk.has_value() == (r.main_count == 2 && !r.regular));
            CHECK(r.main_count == float_main_count(g));
            if (r.two_walk && r.connected) CHECK(r.main_values->mu0() == Catch::Approx(r.spectral_radius).margin(1e-9));
            if (r.harmonic_delta && !r.regular) {
                CHECK(r.two_walk == TwoWalkParams{*r.harmonic_delta, Rational(0)});
                if (r.connected) CHECK(r.main_values->mu0() == Catch::Approx(r.spectral_radius).margin(1e-9));
                CHECK(r.main_values->mu1_exact() == "0");
            }
            ++checked;
        }
    CHECK(checked == 1252);
}
