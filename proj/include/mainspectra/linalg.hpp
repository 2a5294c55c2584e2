#pragma once

// Exact linear algebra over Z and Q: fraction-free rank, span membership,
// characteristic polynomials and distinct-root counting. The floating-point
// eigenvalue routine at the bottom is a cross-check channel only.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mainspectra/exact.hpp"

namespace mainspectra {

/// Rank by fraction-free (Bareiss) elimination. Takes the matrix by value
/// and eliminates in place.
inline std::size_t rank_exact(IntegerMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(rank, c);
        ++rank;
    }
    return rank;
}

inline std::size_t rank_exact(const RationalMatrix& q) {
    IntegerMatrix m(q.rows(), q.cols());
    for (std::size_t r = 0; r < q.rows(); ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < q.cols(); ++c) scale = lcm(scale, denominator(q(r, c)));
        for (std::size_t c = 0; c < q.cols(); ++c)
            m(r, c) = numerator(q(r, c)) * (scale / denominator(q(r, c)));
    }
    return rank_exact(std::move(m));
}

/// Coefficients c with sum_i c_i * basis[i] == target, or nullopt when the
/// target is outside the span. Free coefficients (dependent basis) are 0.
inline std::optional<std::vector<Rational>> solve_in_span(const std::vector<Rational>& target,
                                                          const std::vector<std::vector<Rational>>& basis) {
    const std::size_t n = target.size(), k = basis.size();
    for (const auto& b : basis)
        if (b.size() != n) throw std::invalid_argument("solve_in_span: dimension mismatch");

    RationalMatrix m(n, k + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) m(r, c) = basis[c][r];
        m(r, k) = target[r];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t c = 0; c <= k && row < n; ++c) {
        std::size_t p = row;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) continue;
        if (c == k) return std::nullopt;  // pivot in the augmented column
        for (std::size_t j = c; j <= k; ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = 1 / m(row, c);
        for (std::size_t j = c; j <= k; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j <= k; ++j) m(i, j) -= f * m(row, j);
        }
        pivot_cols.push_back(c);
        ++row;
    }

    std::vector<Rational> coeffs(k, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) coeffs[pivot_cols[i]] = m(i, k);
    return coeffs;
}

namespace detail {

/// Berkowitz over any commutative ring T; coefficients highest degree first.
/// at(i, j) returns entry (i, j) of an n x n matrix.
template <class T, class At>
std::vector<T> berkowitz(std::size_t n, At&& at) {
    if (n == 0) return {T(1)};
    std::vector<T> vec{T(1), T(-at(0, 0))};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        std::vector<T> t(r + 2);
        t[0] = T(1);
        t[1] = T(-at(r, r));
        std::vector<T> v(r), next(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = T(at(i, r));
        for (std::size_t k = 2; k < r + 2; ++k) {
            T dot(0);
            for (std::size_t i = 0; i < r; ++i) dot += T(at(r, i)) * v[i];
            t[k] = -dot;
            if (k + 1 < r + 2) {
                for (std::size_t i = 0; i < r; ++i) {
                    T acc(0);
                    for (std::size_t j = 0; j < r; ++j)
                        if (at(i, j) != 0) acc += T(at(i, j)) * v[j];
                    next[i] = std::move(acc);
                }
                std::swap(v, next);
            }
        }
        std::vector<T> out(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            T acc(0);
            for (std::size_t j = 0; j <= std::min(i, r); ++j) acc += t[i - j] * vec[j];
            out[i] = std::move(acc);
        }
        vec = std::move(out);
    }
    return vec;
}

}  // namespace detail

/// det(xI - M) by Berkowitz's division-free algorithm.
inline IntegerPolynomial char_poly(const IntegerMatrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly: matrix is not square");
    auto vec = detail::berkowitz<Integer>(m.rows(), [&](std::size_t i, std::size_t j) -> const Integer& { return m(i, j); });
    std::vector<Integer> low_to_high(vec.rbegin(), vec.rend());
    return IntegerPolynomial(std::move(low_to_high));
}

namespace detail {

using RationalPoly = std::vector<Rational>;  // lowest degree first

inline void trim(RationalPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RationalPoly to_rational_poly(const IntegerPolynomial& p) {
    RationalPoly out;
    for (const auto& c : p.coefficients()) out.emplace_back(c);
    return out;
}

/// Long division over Q; divisor must be nonzero.
inline std::pair<RationalPoly, RationalPoly> divmod(RationalPoly num, const RationalPoly& den) {
    RationalPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    trim(num);
    while (num.size() >= den.size() && !num.empty()) {
        const std::size_t shift = num.size() - den.size();
        const Rational f = num.back() / den.back();
        quot[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[i + shift] -= f * den[i];
        num.pop_back();
        trim(num);
    }
    trim(quot);
    return {std::move(quot), std::move(num)};
}

inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Clears denominators and returns the primitive integer associate.
inline IntegerPolynomial to_primitive(const RationalPoly& p) {
    Integer scale = 1;
    for (const auto& c : p) scale = lcm(scale, denominator(c));
    std::vector<Integer> coeffs;
    for (const auto& c : p) coeffs.push_back(numerator(c) * (scale / denominator(c)));
    return IntegerPolynomial(std::move(coeffs)).primitive();
}

}  // namespace detail

/// p / gcd(p, p'), primitive with positive leading coefficient.
inline IntegerPolynomial squarefree_part(const IntegerPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntegerPolynomial({1});
    const auto rp = detail::to_rational_poly(p);
    const auto g = detail::gcd(rp, detail::to_rational_poly(p.derivative()));
    return detail::to_primitive(detail::divmod(rp, g).first);
}

/// Number of distinct complex roots of p.
inline int distinct_root_count(const IntegerPolynomial& p) { return squarefree_part(p).degree(); }

/// Quotient q / p when p divides q in Z[x], otherwise nullopt.
inline std::optional<IntegerPolynomial> divides(const IntegerPolynomial& p, const IntegerPolynomial& q) {
    if (p.is_zero()) throw std::invalid_argument("divides: zero divisor");
    auto [quot, rem] = detail::divmod(detail::to_rational_poly(q), detail::to_rational_poly(p));
    if (!rem.empty()) return std::nullopt;
    std::vector<Integer> coeffs;
    for (const auto& c : quot) {
        if (!is_integral(c)) return std::nullopt;
        coeffs.push_back(numerator(c));
    }
    return IntegerPolynomial(std::move(coeffs));
}

/// Integer roots r with |r| <= bound, paired with their multiplicities, in
/// decreasing order of r.
inline std::vector<std::pair<Integer, int>> integer_roots(IntegerPolynomial p, long long bound) {
    if (p.is_zero()) throw std::domain_error("integer_roots: zero polynomial");
    std::vector<std::pair<Integer, int>> roots;
    for (long long r = bound; r >= -bound; --r) {
        int mult = 0;
        const auto factor = IntegerPolynomial::linear_factor(Integer(r));
        while (p.degree() > 0 && p.evaluate(Integer(r)) == 0) {
            p = *divides(factor, p);
            ++mult;
        }
        if (mult) roots.emplace_back(Integer(r), mult);
    }
    return roots;
}

namespace detail {

inline std::vector<double> symmetric_eigenvalues(const IntegerMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXd dense(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            dense(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).convert_to<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

}  // namespace detail

inline bool is_symmetric(const IntegerMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

/// Ascending floating eigenvalues of a symmetric integer matrix. Every value is
/// checked to bracket a root of the exact characteristic polynomial within
/// 1e-9 (sign change of its squarefree part); std::runtime_error otherwise.
inline std::vector<double> eigenvalues_float(const IntegerMatrix& m) {
    if (!is_symmetric(m)) throw std::invalid_argument("eigenvalues_float: matrix is not symmetric");
    auto values = detail::symmetric_eigenvalues(m);
    const auto sqfree = squarefree_part(char_poly(m));
    constexpr double eps = 1e-9;
    for (double v : values) {
        const Rational lo(v - eps), hi(v + eps);
        if (sqfree.evaluate(lo) * sqfree.evaluate(hi) > 0)
            throw std::runtime_error("eigenvalues_float: no characteristic root near " + std::to_string(v));
    }
    return values;
}

}  // namespace mainspectra
