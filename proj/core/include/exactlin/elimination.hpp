#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactlin/errors.hpp"
#include "exactlin/matrix.hpp"
#include "exactlin/ring.hpp"

namespace exactlin {

/// Outcome of the forward way: the triangularized system plus everything the
/// backward way and determinant readoff need.
///
/// For a nonsingular input, leading_minors[k-1] is the pivot a(k,k) of the
/// triangular matrix -- the leading principal minor of order k of the
/// row-permuted input -- and sign * leading_minors[n-1] is the determinant of
/// the original matrix. When elimination finds an all-zero subcolumn it stops:
/// the result is flagged singular, leading_minors is zero-filled from the
/// failed step onward (the determinant is provably zero at that point), and
/// triangular holds the partial state.
template <Ring T>
struct EliminationResult {
    AugmentedSystem<T> triangular;
    std::vector<T> leading_minors;
    int sign = 1;
    /// permutation[i-1] is the input row now sitting at row i.
    std::vector<int> permutation;
    bool singular = false;

    /// Determinant of the original (unpermuted) coefficient block.
    T determinant() const {
        if (singular) return T::zero();
        const T& last = leading_minors.back();
        return sign < 0 ? -last : last;
    }
};

/// Called after each completed elimination step k = 1..n-1 with the current
/// state of the system.
template <Ring T>
using StepObserver = std::function<void(int step, const AugmentedSystem<T>& state)>;

/// Per-step snapshots for tests and the CLI trace; O(n^3) memory, so
/// production paths use forward_eliminate directly.
template <Ring T>
struct EliminationTrace {
    /// snapshots[0] is the input; snapshots[k] the state after step k.
    std::vector<AugmentedSystem<T>> snapshots;
    EliminationResult<T> result;
};

/// Smallest row i >= k whose entry (i, k) is nonzero, or absent when the
/// whole subcolumn vanishes (which proves the matrix singular).
template <Ring T>
std::optional<int> find_pivot(const AugmentedSystem<T>& system, int k) {
    const int n = system.order();
    if (k < 1 || k > n) {
        throw IndexOutOfRange("find_pivot: step " + std::to_string(k) + " outside [1, " +
                              std::to_string(n) + "]");
    }
    for (int i = k; i <= n; ++i) {
        if (!system.body()(i, k).is_zero()) return i;
    }
    return std::nullopt;
}

namespace detail {

/// One multiplication-subtraction step with exact reduction: for every row
/// i > k and column j > k,
///
///   new(i,j) = (pivot * old(i,j) - old(i,k) * old(k,j)) / prev_minor
///
/// where pivot = old(k,k) and the division is exact by Sylvester's identity.
/// Entries (i,k) below the pivot become zero; rows 1..k are untouched. Each
/// row update reads only itself and pivot row k, so row order is immaterial.
template <Ring T>
void eliminate_step_inplace(Matrix<T>& body, int n, int total_cols, int k, const T& prev_minor) {
    const T pivot = body(k, k);
    for (int i = k + 1; i <= n; ++i) {
        const T multiplier = body(i, k);
        for (int j = k + 1; j <= total_cols; ++j) {
            body(i, j) = exact_div(pivot * body(i, j) - multiplier * body(k, j), prev_minor);
        }
        body(i, k) = T::zero();
    }
}

}  // namespace detail

/// Single elimination step k as a pure function. The caller supplies the
/// previous leading minor (the ring's one for k = 1); pivoting, if any, must
/// already have happened.
template <Ring T>
AugmentedSystem<T> elimination_step(AugmentedSystem<T> system, int k, const T& prev_minor) {
    const int n = system.order();
    if (k < 1 || k >= n) {
        throw IndexOutOfRange("elimination_step: step " + std::to_string(k) + " outside [1, " +
                              std::to_string(n - 1) + "]");
    }
    if (system.body()(k, k).is_zero()) {
        throw ZeroPivot("elimination_step: entry (" + std::to_string(k) + ", " + std::to_string(k) +
                        ") is zero; pivot before eliminating");
    }
    detail::eliminate_step_inplace(system.body(), n, n + system.augmented_cols(), k, prev_minor);
    return system;
}

/// The forward way: triangularize the system by steps k = 1..n-1, swapping in
/// a pivot row (and flipping the sign) whenever entry (k,k) is zero. Stops
/// early with a singular-flagged result when no pivot exists.
template <Ring T>
EliminationResult<T> forward_eliminate(AugmentedSystem<T> system, StepObserver<T> observer = {}) {
    const int n = system.order();
    const int total_cols = n + system.augmented_cols();

    std::vector<T> minors;
    minors.reserve(static_cast<std::size_t>(n));
    std::vector<int> permutation(static_cast<std::size_t>(n));
    std::iota(permutation.begin(), permutation.end(), 1);
    int sign = 1;
    bool singular = false;

    T prev_minor = T::one();
    for (int k = 1; k <= n; ++k) {
        const std::optional<int> pivot_row = find_pivot(system, k);
        if (!pivot_row) {
            singular = true;
            minors.resize(static_cast<std::size_t>(n), T::zero());
            break;
        }
        if (*pivot_row != k) {
            detail::swap_rows_inplace(system.body(), k, *pivot_row);
            std::swap(permutation[static_cast<std::size_t>(k - 1)],
                      permutation[static_cast<std::size_t>(*pivot_row - 1)]);
            sign = -sign;
        }
        minors.push_back(system.body()(k, k));
        if (k < n) {
            detail::eliminate_step_inplace(system.body(), n, total_cols, k, prev_minor);
            if (observer) observer(k, system);
        }
        prev_minor = minors.back();
    }
    return EliminationResult<T>{std::move(system), std::move(minors), sign, std::move(permutation),
                                singular};
}

/// forward_eliminate with full per-step snapshots retained.
template <Ring T>
EliminationTrace<T> forward_eliminate_traced(AugmentedSystem<T> system) {
    std::vector<AugmentedSystem<T>> snapshots;
    snapshots.push_back(system);
    EliminationResult<T> result = forward_eliminate(
        std::move(system),
        StepObserver<T>([&snapshots](int, const AugmentedSystem<T>& state) {
            snapshots.push_back(state);
        }));
    return EliminationTrace<T>{std::move(snapshots), std::move(result)};
}

}  // namespace exactlin
