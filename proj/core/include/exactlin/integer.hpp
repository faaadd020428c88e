#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "exactlin/errors.hpp"
#include "exactlin/ring.hpp"

namespace exactlin {

/// Arbitrary-precision integer: the canonical integral-ring instance.
///
/// Arithmetic is exact; there is no overflow and no rounding. Values are
/// immutable and cheap to move.
class Int {
public:
    Int() = default;
    Int(long long value) : value_(value) {}

    static Int zero() { return Int(); }
    static Int one() { return Int(1); }

    /// Parses an optional leading '-' followed by decimal digits.
    /// Throws ParseError on any other input.
    static Int parse(std::string_view text);

    bool is_zero() const { return value_.is_zero(); }

    /// -1, 0 or +1.
    int signum() const { return value_.sign(); }

    Int abs() const {
        Int r;
        r.value_ = boost::multiprecision::abs(value_);
        return r;
    }

    friend Int operator+(const Int& a, const Int& b) {
        Int r;
        r.value_ = a.value_ + b.value_;
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int r;
        r.value_ = a.value_ - b.value_;
        return r;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        r.value_ = a.value_ * b.value_;
        return r;
    }
    friend Int operator-(const Int& a) {
        Int r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Int& a, const Int& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        return a.value_.compare(b.value_) <=> 0;
    }

    /// Exact quotient. Throws DivisionByZero when b == 0 and
    /// ExactDivisionViolation when b does not divide a.
    friend Int exact_div(const Int& a, const Int& b);

    /// Non-negative greatest common divisor; gcd(0, b) == |b|.
    /// Provided on the integer instance only; the generic elimination and
    /// back-substitution algorithms never call it.
    friend Int gcd(const Int& a, const Int& b);

    friend std::string to_string(const Int& a) { return a.value_.str(); }
    friend std::ostream& operator<<(std::ostream& os, const Int& a);

    /// Number of bits in |value|; 0 for zero. Used by growth diagnostics.
    unsigned bit_length() const {
        return value_.is_zero() ? 0u : static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(value_))) + 1u;
    }

private:
    boost::multiprecision::cpp_int value_;
};

static_assert(Ring<Int>);

}  // namespace exactlin
