#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "exactlin/elimination.hpp"
#include "exactlin/errors.hpp"
#include "exactlin/fraction.hpp"
#include "exactlin/matrix.hpp"
#include "exactlin/ring.hpp"

namespace exactlin {

/// Result of the backward way: the determinant plus, per augmented column,
/// the n back-substituted determinants. For a right-hand-side column these
/// are the Cramer determinants; for an identity block, column c holds the
/// adjugate entries p(1,c)..p(n,c). All values refer to the original,
/// unpermuted system (the pivot sign is already applied).
template <Ring T>
struct DeterminantVector {
    T delta;
    /// columns[c-1][k-1] is the value for row k of augmented column c.
    std::vector<std::vector<T>> columns;
};

/// Called for each back-substituted value as it is produced: row n first,
/// then rows n-1 down to 1, augmented columns in order within a row.
template <Ring T>
using ValueObserver = std::function<void(int row, int column, const T& value)>;

/// The backward way. Row n is read directly off the triangular matrix; each
/// earlier row k follows from the rows below it by
///
///   value(k,c) = (delta * t(k, n+c) - sum_{j=k+1..n} t(k,j) * value(j,c)) / t(k,k)
///
/// with t the triangular matrix and the division exact. Because this
/// recurrence is linear in (delta, values) jointly, running it on the
/// sign-corrected delta and sign-corrected row n yields the sign-corrected
/// values for every row, so the permuted system never leaks out.
template <Ring T>
DeterminantVector<T> back_substitute(const EliminationResult<T>& elim,
                                     ValueObserver<T> on_value = {}) {
    if (elim.singular) {
        throw SingularMatrix("back_substitute: matrix is singular (det = 0)");
    }
    const Matrix<T>& t = elim.triangular.body();
    const int n = elim.triangular.order();
    const int m = elim.triangular.augmented_cols();
    const T delta = elim.determinant();

    std::vector<std::vector<T>> columns(static_cast<std::size_t>(m),
                                        std::vector<T>(static_cast<std::size_t>(n), T::zero()));
    for (int c = 1; c <= m; ++c) {
        const T& raw = t(n, n + c);
        T value = elim.sign < 0 ? -raw : raw;
        if (on_value) on_value(n, c, value);
        columns[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(n - 1)] =
            std::move(value);
    }
    for (int k = n - 1; k >= 1; --k) {
        for (int c = 1; c <= m; ++c) {
            std::vector<T>& column = columns[static_cast<std::size_t>(c - 1)];
            T acc = delta * t(k, n + c);
            for (int j = k + 1; j <= n; ++j) {
                acc = acc - t(k, j) * column[static_cast<std::size_t>(j - 1)];
            }
            T value = exact_div(acc, t(k, k));
            if (on_value) on_value(k, c, value);
            column[static_cast<std::size_t>(k - 1)] = std::move(value);
        }
    }
    return DeterminantVector<T>{delta, std::move(columns)};
}

/// Determinant of a square matrix; zero (not an error) when singular.
template <Ring T>
T determinant(const Matrix<T>& a) {
    if (a.rows() != a.cols()) {
        throw ShapeMismatch("determinant: matrix must be square, got " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()));
    }
    const std::vector<T> zero_rhs(static_cast<std::size_t>(a.rows()), T::zero());
    return forward_eliminate(augment(a, zero_rhs)).determinant();
}

/// A solved system: the determinant, the Cramer determinants, and the
/// solution x(k) = cramer(k) / delta as fractions (reduced where the ring
/// provides a gcd).
template <Ring T>
struct ExactSolution {
    T delta;
    std::vector<T> cramer;
    std::vector<Fraction<T>> solution;
};

/// Solves A x = b exactly via elimination on [A | b].
template <Ring T>
ExactSolution<T> solve(const Matrix<T>& a, const std::vector<T>& rhs) {
    DeterminantVector<T> dets = back_substitute(forward_eliminate(augment(a, rhs)));
    std::vector<T>& cramer = dets.columns.front();
    std::vector<Fraction<T>> solution;
    solution.reserve(cramer.size());
    for (const T& value : cramer) {
        solution.push_back(reduce_fraction(value, dets.delta));
    }
    return ExactSolution<T>{std::move(dets.delta), std::move(cramer), std::move(solution)};
}

/// The adjugate P of A, satisfying A P = P A = delta I.
template <Ring T>
struct AdjugateResult {
    T delta;
    Matrix<T> adjugate;
};

/// Computes the adjugate by eliminating [A | I]: each identity column is a
/// unit-vector right-hand side, and its back-substituted determinants are one
/// column of P.
template <Ring T>
AdjugateResult<T> adjugate(const Matrix<T>& a) {
    DeterminantVector<T> dets = back_substitute(forward_eliminate(augment_identity(a)));
    const int n = a.rows();
    Matrix<T> p(n, n);
    for (int j = 1; j <= n; ++j) {
        std::vector<T>& column = dets.columns[static_cast<std::size_t>(j - 1)];
        for (int i = 1; i <= n; ++i) {
            p(i, j) = std::move(column[static_cast<std::size_t>(i - 1)]);
        }
    }
    return AdjugateResult<T>{std::move(dets.delta), std::move(p)};
}

}  // namespace exactlin
