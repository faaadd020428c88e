#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "exactlin/errors.hpp"
#include "exactlin/integer.hpp"
#include "exactlin/ring.hpp"

namespace exactlin {

/// Univariate polynomial over the integers: the second shipped ring
/// instance, exercising the generic algorithms beyond plain integers.
///
/// Coefficients are stored densely, ascending by degree, with trailing
/// zeros trimmed; the zero polynomial is the empty list. There is no gcd
/// on this ring, so fractions over it stay unreduced.
class Poly {
public:
    Poly() = default;
    explicit Poly(Int constant);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Int(1)); }

    /// The monomial x.
    static Poly variable() { return monomial(Int(1), 1); }

    static Poly monomial(Int coefficient, int degree);

    /// coefficients[k] multiplies x^k; trailing zeros are trimmed.
    static Poly from_coefficients(std::vector<Int> coefficients);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

    /// Coefficient of x^k; zero beyond the degree.
    const Int& coefficient(int k) const;

    /// Precondition: nonzero polynomial.
    const Int& leading_coefficient() const;

    bool is_zero() const { return coefficients_.empty(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);

    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Exact quotient by long division. Throws DivisionByZero when b == 0;
    /// throws ExactDivisionViolation when any step's leading-coefficient
    /// division is inexact or a nonzero remainder survives.
    friend Poly exact_div(const Poly& a, const Poly& b);

    /// Canonical display: descending powers, zero terms omitted, unit
    /// coefficients omitted except on the constant term, e.g. "3*x^2 - x + 1".
    friend std::string to_string(const Poly& a);
    friend std::ostream& operator<<(std::ostream& os, const Poly& a);

private:
    std::vector<Int> coefficients_;
};

static_assert(Ring<Poly>);

}  // namespace exactlin
