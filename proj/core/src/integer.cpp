#include "exactlin/integer.hpp"

#include <cctype>
#include <ostream>

namespace exactlin {

Int exact_div(const Int& a, const Int& b) {
    if (b.is_zero()) {
        throw DivisionByZero("exact_div: division by zero");
    }
    boost::multiprecision::cpp_int q, r;
    boost::multiprecision::divide_qr(a.value_, b.value_, q, r);
    if (!r.is_zero()) {
        throw ExactDivisionViolation("exact_div: nonzero remainder");
    }
    Int out;
    out.value_ = std::move(q);
    return out;
}

Int gcd(const Int& a, const Int& b) {
    Int out;
    out.value_ = boost::multiprecision::gcd(boost::multiprecision::abs(a.value_),
                                            boost::multiprecision::abs(b.value_));
    return out;
}

Int Int::parse(std::string_view text) {
    const auto fail = [&] {
        std::string shown(text.substr(0, 32));
        if (text.size() > 32) shown += "...";
        throw ParseError("invalid integer '" + shown + "'");
    };

    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && digits.front() == '-') {
        negative = true;
        digits.remove_prefix(1);
    }
    if (digits.empty()) fail();
    for (char c : digits) {
        if (c < '0' || c > '9') fail();
    }
    // Strip leading zeros so the cpp_int constructor cannot read the text
    // as an octal literal.
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);

    Int out;
    out.value_ = boost::multiprecision::cpp_int(std::string(digits));
    if (negative) out.value_ = -out.value_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Int& a) { return os << to_string(a); }

}  // namespace exactlin
