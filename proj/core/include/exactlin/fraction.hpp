#pragma once

#include <string>
#include <utility>

#include "exactlin/errors.hpp"
#include "exactlin/integer.hpp"
#include "exactlin/ring.hpp"

namespace exactlin {

/// A quotient-field element p/q with q != 0.
///
/// `reduced` records whether the pair is in lowest terms with canonical
/// denominator sign. Equality is representational: it compares numerator,
/// denominator and the flag, not the rational value.
template <Ring T>
struct Fraction {
    T numerator;
    T denominator;
    bool reduced = false;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Generic rings carry no gcd, so the fraction is stored as given and
/// flagged unreduced.
template <Ring T>
Fraction<T> reduce_fraction(T numerator, T denominator) {
    if (denominator.is_zero()) {
        throw DivisionByZero("reduce_fraction: denominator is zero");
    }
    return Fraction<T>{std::move(numerator), std::move(denominator), false};
}

/// Integer fractions are divided by their gcd and the denominator is kept
/// positive; 0/q reduces to 0/1.
inline Fraction<Int> reduce_fraction(Int numerator, Int denominator) {
    if (denominator.is_zero()) {
        throw DivisionByZero("reduce_fraction: denominator is zero");
    }
    const Int g = gcd(numerator, denominator);
    numerator = exact_div(numerator, g);
    denominator = exact_div(denominator, g);
    if (denominator.signum() < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    return Fraction<Int>{std::move(numerator), std::move(denominator), true};
}

template <Ring T>
std::string to_string(const Fraction<T>& f) {
    // Multi-term ring values (polynomials) are parenthesized so the quotient
    // stays unambiguous: "(x - 1)/(x^2 - 1)".
    const auto wrap = [](std::string s) {
        return s.find(' ') == std::string::npos ? s : "(" + std::move(s) + ")";
    };
    return wrap(to_string(f.numerator)) + "/" + wrap(to_string(f.denominator));
}

}  // namespace exactlin
