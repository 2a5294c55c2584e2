#pragma once

// Exact carriers: arbitrary-precision integers and rationals, dense matrices
// over them, and integer polynomials.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mainspectra {

// Expression templates disabled.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// num / den in lowest terms; throws std::domain_error when den is zero.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) num = -num, den = -den;
    return Rational(num, den);
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// "7", "-3/2".
inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "a" or "a/b"; throws std::invalid_argument on anything else.
inline Rational parse_rational(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty integer in '" + text + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad integer in '" + text + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer in '" + text + "'");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return make_rational(parse_int(text.substr(0, slash)), den);
}

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

inline RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
    return out;
}

/// Polynomial with integer coefficients, stored lowest degree first and
/// kept canonical (no zero leading coefficient). The zero polynomial has
/// no coefficients and degree -1.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<Integer> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }
    IntegerPolynomial(std::initializer_list<long long> low_to_high) {
        for (long long c : low_to_high) coeffs_.emplace_back(c);
        trim();
    }

    static IntegerPolynomial monomial(std::size_t degree, Integer coeff = 1) {
        std::vector<Integer> c(degree + 1);
        c[degree] = std::move(coeff);
        return IntegerPolynomial(std::move(c));
    }
    /// x - root
    static IntegerPolynomial linear_factor(const Integer& root) { return IntegerPolynomial({-root, Integer(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const Integer& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) g = gcd(g, c);
        return g;
    }

    /// Divides out the content and makes the leading coefficient positive.
    IntegerPolynomial primitive() const {
        if (is_zero()) return *this;
        Integer g = content();
        if (leading() < 0) g = -g;
        std::vector<Integer> c(coeffs_);
        for (auto& x : c) x /= g;
        return IntegerPolynomial(std::move(c));
    }

    IntegerPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Integer> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long long>(i);
        return IntegerPolynomial(std::move(c));
    }

    template <class T>
    T evaluate(const T& x) const {
        T acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    IntegerPolynomial pow(unsigned e) const {
        IntegerPolynomial result({1}), base = *this;
        while (e) {
            if (e & 1U) result = result * base;
            base = base * base;
            e >>= 1U;
        }
        return result;
    }

    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntegerPolynomial(std::move(c));
    }
    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
        return IntegerPolynomial(std::move(c));
    }
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
        return IntegerPolynomial(std::move(c));
    }
    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

    /// Human-readable form, e.g. "x^4 - 4x^2".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Integer& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || i == 0) os << mag;
            if (i >= 1) os << 'x';
            if (i >= 2) os << '^' << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

}  // namespace mainspectra
