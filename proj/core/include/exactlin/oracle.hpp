#pragma once

#include <string>
#include <vector>

#include "exactlin/errors.hpp"
#include "exactlin/matrix.hpp"
#include "exactlin/ring.hpp"

/// Independent reference computations used to cross-check the elimination
/// pipeline. Everything here is deliberately naive -- cofactor expansions and
/// explicit minors -- so the implementations share no code (and no bugs) with
/// the fraction-free algorithms they validate. Costs are factorial, hence the
/// small hard size limits.

namespace exactlin {

namespace detail {

template <Ring T>
Matrix<T> drop_row_col(const Matrix<T>& a, int row, int col) {
    Matrix<T> sub(a.rows() - 1, a.cols() - 1);
    int si = 1;
    for (int i = 1; i <= a.rows(); ++i) {
        if (i == row) continue;
        int sj = 1;
        for (int j = 1; j <= a.cols(); ++j) {
            if (j == col) continue;
            sub(si, sj) = a(i, j);
            ++sj;
        }
        ++si;
    }
    return sub;
}

template <Ring T>
T cofactor_det_unchecked(const Matrix<T>& a) {
    const int n = a.rows();
    if (n == 1) return a(1, 1);
    T acc = T::zero();
    for (int j = 1; j <= n; ++j) {
        if (a(1, j).is_zero()) continue;
        const T term = a(1, j) * cofactor_det_unchecked(drop_row_col(a, 1, j));
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

/// k x k submatrix from rows 1..k-1 plus i, columns 1..k-1 plus j.
template <Ring T>
Matrix<T> bordered_submatrix(const Matrix<T>& a, int k, int i, int j) {
    Matrix<T> sub(k, k);
    for (int r = 1; r < k; ++r) {
        for (int c = 1; c < k; ++c) sub(r, c) = a(r, c);
        sub(r, k) = a(r, j);
    }
    for (int c = 1; c < k; ++c) sub(k, c) = a(i, c);
    sub(k, k) = a(i, j);
    return sub;
}

}  // namespace detail

/// Determinant by cofactor expansion along the first row. O(n!), limited to
/// n <= 10.
template <Ring T>
T cofactor_det(const Matrix<T>& a) {
    if (a.rows() != a.cols()) {
        throw ShapeMismatch("cofactor_det: matrix must be square, got " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()));
    }
    if (a.rows() > 10) {
        throw TooLarge("cofactor_det: order " + std::to_string(a.rows()) +
                       " exceeds the naive-expansion limit of 10");
    }
    return detail::cofactor_det_unchecked(a);
}

/// Copy of a with column j replaced by the given vector (the Cramer
/// numerator matrix when v is the right-hand side).
template <Ring T>
Matrix<T> replace_column(const Matrix<T>& a, int j, const std::vector<T>& column) {
    if (a.rows() != a.cols()) {
        throw ShapeMismatch("replace_column: matrix must be square, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    if (j < 1 || j > a.cols()) {
        throw IndexOutOfRange("replace_column: column index " + std::to_string(j) +
                              " outside [1, " + std::to_string(a.cols()) + "]");
    }
    if (static_cast<int>(column.size()) != a.rows()) {
        throw ShapeMismatch("replace_column: column has " + std::to_string(column.size()) +
                            " entries, expected " + std::to_string(a.rows()));
    }
    Matrix<T> result = a;
    for (int i = 1; i <= a.rows(); ++i) {
        result(i, j) = column[static_cast<std::size_t>(i - 1)];
    }
    return result;
}

/// Bordered minor of order k: the determinant of the k x k submatrix taking
/// rows 1..k-1 plus row i and columns 1..k-1 plus column j. Order 1 is the
/// raw entry (i, j). This is the reference meaning of every intermediate
/// entry the elimination produces after step k-1.
template <Ring T>
T bordered_minor(const AugmentedSystem<T>& system, int k, int i, int j) {
    const int n = system.order();
    const int cols = n + system.augmented_cols();
    if (k < 1 || k > n || i < k || i > n || j < k || j > cols) {
        throw IndexOutOfRange("bordered_minor: need 1 <= k <= i <= n and k <= j <= n+m, got k=" +
                              std::to_string(k) + " i=" + std::to_string(i) + " j=" +
                              std::to_string(j));
    }
    return cofactor_det(detail::bordered_submatrix(system.body(), k, i, j));
}

/// Adjugate from first principles: entry (i, j) is the (j, i) cofactor.
/// O(n * n!), limited to n <= 8. For n = 1 the adjugate is [[1]] (the empty
/// minor has determinant one).
template <Ring T>
Matrix<T> naive_adjugate(const Matrix<T>& a) {
    if (a.rows() != a.cols()) {
        throw ShapeMismatch("naive_adjugate: matrix must be square, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    const int n = a.rows();
    if (n > 8) {
        throw TooLarge("naive_adjugate: order " + std::to_string(n) +
                       " exceeds the naive-expansion limit of 8");
    }
    Matrix<T> adj(n, n);
    if (n == 1) {
        adj(1, 1) = T::one();
        return adj;
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const T minor = detail::cofactor_det_unchecked(detail::drop_row_col(a, j, i));
            adj(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    return adj;
}

/// Sylvester's identity for bordered minors: with M^s the matrix of order-s
/// bordered minors over rows/columns s..n, det(M^s) equals
/// (leading minor of order s-1)^(n-s) * det(A), the order-0 minor being one.
/// Returns whether both sides agree, each evaluated by cofactor expansion.
/// This identity is what guarantees every division in the elimination is
/// remainder-free.
template <Ring T>
bool sylvester_check(const Matrix<T>& a, int s) {
    if (a.rows() != a.cols()) {
        throw ShapeMismatch("sylvester_check: matrix must be square, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    const int n = a.rows();
    if (s < 1 || s > n) {
        throw IndexOutOfRange("sylvester_check: minor order must satisfy 1 <= s <= n, got s=" +
                              std::to_string(s) + " for n=" + std::to_string(n));
    }
    Matrix<T> minors(n - s + 1, n - s + 1);
    for (int i = s; i <= n; ++i) {
        for (int j = s; j <= n; ++j) {
            minors(i - s + 1, j - s + 1) = cofactor_det(detail::bordered_submatrix(a, s, i, j));
        }
    }
    const T base = (s == 1) ? T::one()
                            : cofactor_det(detail::bordered_submatrix(a, s - 1, s - 1, s - 1));
    T scale = T::one();
    for (int p = 0; p < n - s; ++p) scale = scale * base;
    return cofactor_det(minors) == scale * cofactor_det(a);
}

/// Column-replacement form: the same identity applied to a with column j
/// replaced by v, relating det(M_j^s) to the Cramer determinant of column j.
/// Requires j >= s so the replacement leaves the order s-1 leading block --
/// and with it the scale factor -- untouched.
template <Ring T>
bool sylvester_check(const Matrix<T>& a, int s, int j, const std::vector<T>& v) {
    if (j < s) {
        throw IndexOutOfRange(
            "sylvester_check: replaced column must not intersect the leading block, need j >= s, "
            "got j=" +
            std::to_string(j) + " s=" + std::to_string(s));
    }
    return sylvester_check(replace_column(a, j, v), s);
}

}  // namespace exactlin
