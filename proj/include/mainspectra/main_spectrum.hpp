#pragma once

// Main eigenvalues: walk-matrix rank, 2-walk (alpha, beta)-linearity,
// harmonicity, and the closed-form pair of main eigenvalues.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mainspectra/exact.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/linalg.hpp"

namespace mainspectra {

inline IntegerMatrix adjacency_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    IntegerMatrix a(n, n);
    for (const auto& e : g.edges()) {
        a(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) = 1;
        a(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) = 1;
    }
    return a;
}

inline std::vector<Integer> apply_adjacency(const Graph& g, const std::vector<Integer>& x) {
    std::vector<Integer> y(x.size());
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) y[static_cast<std::size_t>(v)] += x[static_cast<std::size_t>(w)];
    return y;
}

/// n x n matrix whose column i is A^i j.
inline IntegerMatrix walk_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    IntegerMatrix w(n, n);
    std::vector<Integer> col(n, Integer(1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < n; ++r) w(r, i) = col[r];
        if (i + 1 < n) col = apply_adjacency(g, col);
    }
    return w;
}

/// Rank of the walk matrix. Columns are added one at a time and the scan
/// stops at the first dependent column: once A^k j lies in the span of the
/// earlier columns that span is A-invariant, so no later column raises the
/// rank.
inline int main_eigenvalue_count(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::vector<Integer>> cols{std::vector<Integer>(n, Integer(1))};
    for (std::size_t k = 1; k <= n; ++k) {
        if (k == n) return static_cast<int>(n);
        cols.push_back(apply_adjacency(g, cols.back()));
        IntegerMatrix m(n, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
        if (rank_exact(std::move(m)) == k) return static_cast<int>(k);
    }
    throw std::logic_error("main_eigenvalue_count: unreachable");
}

struct TwoWalkParams {
    Rational alpha;
    Rational beta;
    friend bool operator==(const TwoWalkParams&, const TwoWalkParams&) = default;
};

/// (alpha, beta) with A d = alpha d + beta j for a non-regular graph;
/// nullopt for regular graphs and when A d leaves span{d, j}.
inline std::optional<TwoWalkParams> two_walk_params(const Graph& g) {
    if (is_regular(g)) return std::nullopt;
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<Integer> d(n);
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    const auto ad = apply_adjacency(g, d);

    std::vector<Rational> target(ad.begin(), ad.end());
    std::vector<std::vector<Rational>> basis{std::vector<Rational>(d.begin(), d.end()),
                                             std::vector<Rational>(n, Rational(1))};
    auto c = solve_in_span(target, basis);
    if (!c) return std::nullopt;
    return TwoWalkParams{(*c)[0], (*c)[1]};
}

/// Primitive integer form of x^2 - alpha x - beta.
inline IntegerPolynomial quadratic_factor(const TwoWalkParams& p) {
    return detail::to_primitive({-p.beta, -p.alpha, Rational(1)});
}

namespace detail {

inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const Integer num = numerator(q), den = denominator(q);
    const Integer rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return make_rational(rn, rd);
}

}  // namespace detail

/// Roots mu0 >= mu1 of x^2 - alpha x - beta, kept exact as (alpha, beta).
class QuadraticPair {
public:
    QuadraticPair(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    Rational discriminant() const { return alpha_ * alpha_ + 4 * beta_; }

    double mu0() const { return (alpha_.convert_to<double>() + std::sqrt(discriminant().convert_to<double>())) / 2; }
    double mu1() const { return (alpha_.convert_to<double>() - std::sqrt(discriminant().convert_to<double>())) / 2; }

    /// Exact renderings: "4+sqrt(7)" / "4-sqrt(7)", or plain rationals when
    /// the discriminant is a perfect square.
    std::string mu0_exact() const { return render(true); }
    std::string mu1_exact() const { return render(false); }

    friend bool operator==(const QuadraticPair&, const QuadraticPair&) = default;

private:
    std::string render(bool plus) const {
        const Rational half = alpha_ / 2;
        const Rational radicand = half * half + beta_;
        if (auto root = detail::rational_sqrt(radicand)) return to_string(plus ? half + *root : half - *root);
        const std::string surd = "sqrt(" + to_string(radicand) + ")";
        if (half == 0) return plus ? surd : "-" + surd;
        return to_string(half) + (plus ? "+" : "-") + surd;
    }

    Rational alpha_;
    Rational beta_;
};

/// Throws std::domain_error when alpha^2 + 4 beta <= 0: no graph realizes it.
inline QuadraticPair main_values(const TwoWalkParams& p) {
    if (p.alpha * p.alpha + 4 * p.beta <= 0)
        throw std::domain_error("main_values: alpha^2 + 4 beta must be positive");
    return {p.alpha, p.beta};
}

/// The delta >= 0 with A d = delta d, if any (a regular graph gives its valency).
inline std::optional<Rational> harmonic_delta(const Graph& g) {
    const auto d = degree_vector(g);
    const auto pivot = std::find_if(d.begin(), d.end(), [](int x) { return x != 0; });
    if (pivot == d.end()) return Rational(0);
    const int p = static_cast<int>(pivot - d.begin());
    long long ad_p = 0;
    for (int w : g.neighbors(p)) ad_p += d[static_cast<std::size_t>(w)];
    const Rational delta = make_rational(ad_p, *pivot);
    for (int v = 0; v < g.order(); ++v) {
        long long ad = 0;
        for (int w : g.neighbors(v)) ad += d[static_cast<std::size_t>(w)];
        if (Rational(ad) != delta * d[static_cast<std::size_t>(v)]) return std::nullopt;
    }
    return delta;
}

/// Whether a 2-walk (alpha, beta)-linear graph exists for integers alpha >= 0, beta.
inline bool existence_check(long long alpha, long long beta) {
    if (alpha < 0) throw std::invalid_argument("existence_check: alpha must be non-negative");
    return alpha * alpha + 4 * beta >= 4 && !(alpha == 0 && beta == 1);
}

inline double spectral_radius(const Graph& g) {
    const auto ev = detail::symmetric_eigenvalues(adjacency_matrix(g));
    return ev.back();
}

/// Number of adjacency eigenspaces onto which j has a projection of norm
/// above `threshold`, computed in floating point. Independent of the
/// walk-matrix route; used as a cross-check only.
inline int float_main_count(const Graph& g, double threshold = 1e-6, double cluster = 1e-6) {
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    const auto& values = solver.eigenvalues();
    const Eigen::VectorXd coords = solver.eigenvectors().transpose() * Eigen::VectorXd::Ones(n);
    int count = 0;
    for (Eigen::Index i = 0; i < n;) {
        Eigen::Index j = i;
        double weight = 0;
        while (j < n && values(j) - values(i) < cluster) weight += coords(j) * coords(j), ++j;
        if (std::sqrt(weight) > threshold) ++count;
        i = j;
    }
    return count;
}

struct MainSpectrumReport {
    int n = 0;
    std::size_t edges = 0;
    int main_count = 0;
    bool regular = false;
    bool connected = false;
    std::optional<TwoWalkParams> two_walk;
    std::optional<Rational> harmonic_delta;
    std::optional<QuadraticPair> main_values;
    double spectral_radius = 0;
};

/// Full classification. Disconnected input is analysed verbatim and flagged.
/// Throws std::logic_error if the exact invariants disagree (a defect).
inline MainSpectrumReport analyze(const Graph& g) {
    MainSpectrumReport r;
    r.n = g.order();
    r.edges = g.size();
    r.main_count = main_eigenvalue_count(g);
    r.regular = is_regular(g);
    r.connected = is_connected(g);
    r.two_walk = two_walk_params(g);
    r.harmonic_delta = harmonic_delta(g);
    r.spectral_radius = spectral_radius(g);

    if (r.main_count < 1) throw std::logic_error("analyze: graph without main eigenvalues");
    if (r.two_walk.has_value() != (r.main_count == 2 && !r.regular))
        throw std::logic_error("analyze: 2-walk parameters disagree with the walk-matrix rank");
    if (r.two_walk) {
        r.main_values = main_values(*r.two_walk);
        if (!divides(quadratic_factor(*r.two_walk), char_poly(adjacency_matrix(g))))
            throw std::logic_error("analyze: x^2 - alpha x - beta does not divide the characteristic polynomial");
    }
    return r;
}

}  // namespace mainspectra
