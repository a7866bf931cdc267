#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over Q / Q(i).
 *
 * Forward elimination is fraction-free (Bareiss): after step k every entry is
 * a (k+1)-minor of the input, and each division by the previous pivot is exact.
 * Pivots are chosen by lowest row index within the lowest usable column, so
 * echelon forms and nullspace bases are deterministic.
 */

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace varinterp {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    /// [A | B], same row count.
    Matrix hstack(const Matrix& right) const {
        if (right.rows_ != rows_) throw PreconditionError("hstack row mismatch");
        Matrix out(rows_, cols_ + right.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
            for (std::size_t c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
        }
        return out;
    }

    std::vector<Scalar> multiply(std::span<const Scalar> x) const {
        if (x.size() != cols_) throw PreconditionError("matrix-vector size mismatch");
        std::vector<Scalar> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !x[c].is_zero()) out[r] += (*this)(r, c) * x[c];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct EchelonForm {
    Matrix matrix;                     ///< reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/// Bareiss forward elimination in place; returns pivot columns.
inline std::vector<std::size_t> bareiss_eliminate(Matrix& a) {
    std::vector<std::size_t> pivots;
    Scalar previous(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        const Scalar pivot = a(r, c);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const Scalar factor = a(i, c);
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                Scalar v = pivot * a(i, j);
                if (!factor.is_zero() && !a(r, j).is_zero()) v -= factor * a(r, j);
                if (!v.is_zero()) v /= previous;
                a(i, j) = std::move(v);
            }
            a(i, c) = Scalar(0);
        }
        previous = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline EchelonForm reduced_row_echelon(Matrix a) {
    EchelonForm out;
    out.pivots = bareiss_eliminate(a);
    for (std::size_t k = out.pivots.size(); k-- > 0;) {
        const std::size_t c = out.pivots[k];
        const Scalar inv = Scalar(1) / a(k, c);
        for (std::size_t j = c; j < a.cols(); ++j)
            if (!a(k, j).is_zero()) a(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar factor = a(i, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(k, j).is_zero()) a(i, j) -= factor * a(k, j);
        }
    }
    out.matrix = std::move(a);
    return out;
}

inline std::size_t rank(Matrix a) { return bareiss_eliminate(a).size(); }

/// Basis of {x : A x = 0}, one vector per free column in increasing column
/// order; each vector has a 1 in its free column and zeros in the others.
inline std::vector<std::vector<Scalar>> nullspace(const Matrix& a) {
    EchelonForm e = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(a.cols());
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.matrix(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of A x = b (free unknowns set to zero), or nothing when inconsistent.
inline std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b) {
    if (b.size() != a.rows()) throw PreconditionError("right-hand side has wrong length");
    Matrix rhs(a.rows(), 1);
    for (std::size_t r = 0; r < a.rows(); ++r) rhs(r, 0) = b[r];
    EchelonForm e = reduced_row_echelon(a.hstack(rhs));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    std::vector<Scalar> x(a.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.matrix(k, a.cols());
    return x;
}

}  // namespace varinterp
