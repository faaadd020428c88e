#pragma once

#include <concepts>
#include <string>

namespace exactlin {

/// Contract for elements of an integral commutative ring with unit.
///
/// Requirements beyond the syntax below, which implementations must uphold
/// and which the property tests of each shipped instance exercise:
///   - `+` and `*` are commutative and associative, `*` distributes over `+`;
///   - there are no zero divisors (a*b == 0 implies a == 0 or b == 0), so
///     cancellation by nonzero elements is valid;
///   - `zero()` / `one()` are the additive / multiplicative identities;
///   - equality is canonical: two values denoting the same ring element
///     compare equal;
///   - `exact_div(a, b)` returns q with q*b == a, throws DivisionByZero when
///     b == 0 and ExactDivisionViolation when b does not divide a;
///   - `to_string` is a canonical display form.
///
/// All conforming types are immutable values: every operation returns a new
/// value, so they are safe to share between concurrent execution contexts.
template <typename T>
concept Ring =
    std::regular<T> && requires(const T a, const T b) {
        { T::zero() } -> std::same_as<T>;
        { T::one() } -> std::same_as<T>;
        { a + b } -> std::same_as<T>;
        { a - b } -> std::same_as<T>;
        { a * b } -> std::same_as<T>;
        { -a } -> std::same_as<T>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { exact_div(a, b) } -> std::same_as<T>;
        { to_string(a) } -> std::same_as<std::string>;
    };

}  // namespace exactlin
