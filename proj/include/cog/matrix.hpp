#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cog/errors.hpp"
#include "cog/polynomial.hpp"

// Minimal dense matrix over an exact ring (CycloRational, Polynomial, ...).
// The element type has no default zero, so constructors take one.

namespace cog {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), a_(rows * cols, zero) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

template <class T, class Mul>
Matrix<T> mat_mul(const Matrix<T>& x, const Matrix<T>& y, const T& zero, Mul mul) {
    require(x.cols() == y.rows(), errc::arity_mismatch, "matrix product shape mismatch");
    Matrix<T> z(x.rows(), y.cols(), zero);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const T& xv = x.at(i, k);
            if (xv == zero) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                const T& yv = y.at(k, j);
                if (yv == zero) continue;
                z.at(i, j) += mul(xv, yv);
            }
        }
    return z;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& x, const Matrix<T>& y, const T& zero) {
    return mat_mul(x, y, zero, [](const T& a, const T& b) { return a * b; });
}

template <class T>
Matrix<T> mat_transpose(const Matrix<T>& m) {
    if (m.rows() == 0 || m.cols() == 0) return m;
    Matrix<T> z(m.cols(), m.rows(), m.at(0, 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) z.at(j, i) = m.at(i, j);
    return z;
}

template <class T>
T mat_trace(const Matrix<T>& m, const T& zero) {
    require(m.rows() == m.cols(), errc::arity_mismatch, "trace of non-square matrix");
    T s = zero;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m.at(i, i);
    return s;
}

// F == alpha * G entrywise for one positive rational alpha.
inline std::optional<Rational> matrix_scale_equal(const Matrix<Polynomial>& f,
                                                  const Matrix<Polynomial>& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) return std::nullopt;
    std::optional<Rational> alpha;
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const auto& fv = f.at(i, j);
            const auto& gv = g.at(i, j);
            if (fv.is_zero() && gv.is_zero()) continue;
            auto a = poly_scale_equal(fv, gv);
            if (!a) return std::nullopt;
            if (alpha && *alpha != *a) return std::nullopt;
            alpha = a;
        }
    return alpha ? alpha : std::optional<Rational>(Rational(1));
}

} // namespace cog
