#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "exactlin/errors.hpp"
#include "exactlin/ring.hpp"

namespace exactlin {

/// Dense row-major matrix over a ring. Row and column indices are 1-based
/// throughout the library, matching the usual mathematical convention.
///
/// The public operations below are value-producing: they never mutate their
/// arguments, so shared matrices are safe to read concurrently.
template <Ring T>
class Matrix {
public:
    /// rows x cols matrix filled with zero. Both dimensions must be >= 1.
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) {
            throw EmptyInput("matrix dimensions must be at least 1x1, got " + std::to_string(rows) +
                             "x" + std::to_string(cols));
        }
        entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), T::zero());
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Bounds-checked 1-based access.
    const T& at(int i, int j) const {
        check_index(i, j);
        return (*this)(i, j);
    }
    T& at(int i, int j) {
        check_index(i, j);
        return (*this)(i, j);
    }

    /// Unchecked 1-based access.
    const T& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i - 1) * cols_ + static_cast<std::size_t>(j - 1)];
    }
    T& operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i - 1) * cols_ + static_cast<std::size_t>(j - 1)];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    void check_index(int i, int j) const {
        if (i < 1 || i > rows_) {
            throw IndexOutOfRange("row index " + std::to_string(i) + " outside [1, " +
                                  std::to_string(rows_) + "]");
        }
        if (j < 1 || j > cols_) {
            throw IndexOutOfRange("column index " + std::to_string(j) + " outside [1, " +
                                  std::to_string(cols_) + "]");
        }
    }

    int rows_;
    int cols_;
    std::vector<T> entries_;
};

template <Ring T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            if (j > 1) os << ' ';
            os << to_string(m(i, j));
        }
        os << '\n';
    }
    return os;
}

/// Builds a matrix from row lists. The input must be nonempty and
/// rectangular.
template <Ring T>
Matrix<T> from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw EmptyInput("from_rows: at least one row and one column required");
    }
    const int n_rows = static_cast<int>(rows.size());
    const int n_cols = static_cast<int>(rows.front().size());
    Matrix<T> m(n_rows, n_cols);
    for (int i = 1; i <= n_rows; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != n_cols) {
            throw RaggedInput("from_rows: row " + std::to_string(i) + " has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n_cols));
        }
        for (int j = 1; j <= n_cols; ++j) {
            m(i, j) = row[static_cast<std::size_t>(j - 1)];
        }
    }
    return m;
}

/// An n x (n+m) system: square coefficient block plus m >= 1 appended
/// columns (one right-hand side for solving; an identity block for the
/// adjugate).
template <Ring T>
class AugmentedSystem {
public:
    AugmentedSystem(int order, int augmented_cols, Matrix<T> body)
        : n_(order), m_(augmented_cols), body_(std::move(body)) {
        if (n_ < 1 || m_ < 1) {
            throw ShapeMismatch("augmented system needs order >= 1 and at least one augmented column");
        }
        if (body_.rows() != n_ || body_.cols() != n_ + m_) {
            throw ShapeMismatch("augmented system body must be " + std::to_string(n_) + "x" +
                                std::to_string(n_ + m_) + ", got " + std::to_string(body_.rows()) +
                                "x" + std::to_string(body_.cols()));
        }
    }

    /// Order n of the coefficient block.
    int order() const { return n_; }

    /// Number m of augmented columns.
    int augmented_cols() const { return m_; }

    const Matrix<T>& body() const { return body_; }

    /// Mutable entry access; the shape itself cannot change.
    Matrix<T>& body() { return body_; }

    friend bool operator==(const AugmentedSystem& a, const AugmentedSystem& b) = default;

private:
    int n_;
    int m_;
    Matrix<T> body_;
};

/// [A | b]: appends one right-hand-side column to a square matrix.
template <Ring T>
AugmentedSystem<T> augment(const Matrix<T>& a, const std::vector<T>& rhs) {
    if (a.rows() != a.cols()) {
        throw ShapeMismatch("augment: coefficient matrix must be square, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    const int n = a.rows();
    if (static_cast<int>(rhs.size()) != n) {
        throw ShapeMismatch("augment: right-hand side has " + std::to_string(rhs.size()) +
                            " entries, expected " + std::to_string(n));
    }
    Matrix<T> body(n, n + 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) body(i, j) = a(i, j);
        body(i, n + 1) = rhs[static_cast<std::size_t>(i - 1)];
    }
    return AugmentedSystem<T>(n, 1, std::move(body));
}

/// [A | I]: appends the n x n identity block, so eliminating the result
/// solves all n unit-vector systems simultaneously.
template <Ring T>
AugmentedSystem<T> augment_identity(const Matrix<T>& a) {
    if (a.rows() != a.cols()) {
        throw ShapeMismatch("augment_identity: coefficient matrix must be square, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    const int n = a.rows();
    Matrix<T> body(n, 2 * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) body(i, j) = a(i, j);
        body(i, n + i) = T::one();
    }
    return AugmentedSystem<T>(n, n, std::move(body));
}

namespace detail {

template <Ring T>
void swap_rows_inplace(Matrix<T>& m, int i, int j) {
    if (i == j) return;
    for (int c = 1; c <= m.cols(); ++c) {
        std::swap(m(i, c), m(j, c));
    }
}

}  // namespace detail

/// Returns the system with rows i and j exchanged.
template <Ring T>
AugmentedSystem<T> swap_rows(AugmentedSystem<T> system, int i, int j) {
    const int n = system.order();
    if (i < 1 || i > n) {
        throw IndexOutOfRange("swap_rows: row index " + std::to_string(i) + " outside [1, " +
                              std::to_string(n) + "]");
    }
    if (j < 1 || j > n) {
        throw IndexOutOfRange("swap_rows: row index " + std::to_string(j) + " outside [1, " +
                              std::to_string(n) + "]");
    }
    detail::swap_rows_inplace(system.body(), i, j);
    return system;
}

}  // namespace exactlin
