#include "exactlin/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace exactlin {

namespace {

void trim(std::vector<Int>& coefficients) {
    while (!coefficients.empty() && coefficients.back().is_zero()) {
        coefficients.pop_back();
    }
}

const Int kZero{};

}  // namespace

Poly::Poly(Int constant) {
    if (!constant.is_zero()) {
        coefficients_.push_back(std::move(constant));
    }
}

Poly Poly::monomial(Int coefficient, int degree) {
    Poly p;
    if (degree < 0) {
        throw IndexOutOfRange("monomial: negative degree " + std::to_string(degree));
    }
    if (!coefficient.is_zero()) {
        p.coefficients_.assign(static_cast<std::size_t>(degree) + 1, Int());
        p.coefficients_.back() = std::move(coefficient);
    }
    return p;
}

Poly Poly::from_coefficients(std::vector<Int> coefficients) {
    trim(coefficients);
    Poly p;
    p.coefficients_ = std::move(coefficients);
    return p;
}

const Int& Poly::coefficient(int k) const {
    if (k < 0 || k > degree()) return kZero;
    return coefficients_[static_cast<std::size_t>(k)];
}

const Int& Poly::leading_coefficient() const {
    if (is_zero()) {
        throw DivisionByZero("leading_coefficient: zero polynomial");
    }
    return coefficients_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Int> sum(std::max(a.coefficients_.size(), b.coefficients_.size()), Int());
    for (std::size_t k = 0; k < sum.size(); ++k) {
        sum[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
    }
    return Poly::from_coefficients(std::move(sum));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Int> diff(std::max(a.coefficients_.size(), b.coefficients_.size()), Int());
    for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] = a.coefficient(static_cast<int>(k)) - b.coefficient(static_cast<int>(k));
    }
    return Poly::from_coefficients(std::move(diff));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Int> prod(a.coefficients_.size() + b.coefficients_.size() - 1, Int());
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            prod[i + j] = prod[i + j] + a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return Poly::from_coefficients(std::move(prod));
}

Poly operator-(const Poly& a) {
    std::vector<Int> neg(a.coefficients_.size(), Int());
    for (std::size_t k = 0; k < neg.size(); ++k) {
        neg[k] = -a.coefficients_[k];
    }
    return Poly::from_coefficients(std::move(neg));
}

Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) {
        throw DivisionByZero("exact_div: division by zero polynomial");
    }
    if (a.is_zero()) return Poly();
    const int da = a.degree();
    const int db = b.degree();
    if (da < db) {
        throw ExactDivisionViolation("exact_div: divisor degree exceeds dividend degree");
    }

    std::vector<Int> remainder = a.coefficients_;
    std::vector<Int> quotient(static_cast<std::size_t>(da - db) + 1, Int());
    const Int& lead = b.coefficients_.back();
    for (int k = da - db; k >= 0; --k) {
        Int head = remainder[static_cast<std::size_t>(k + db)];
        if (head.is_zero()) continue;
        Int q = exact_div(head, lead);  // throws when the step is inexact
        for (int j = 0; j <= db; ++j) {
            remainder[static_cast<std::size_t>(k + j)] =
                remainder[static_cast<std::size_t>(k + j)] - q * b.coefficients_[static_cast<std::size_t>(j)];
        }
        quotient[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const Int& c : remainder) {
        if (!c.is_zero()) {
            throw ExactDivisionViolation("exact_div: nonzero polynomial remainder");
        }
    }
    return Poly::from_coefficients(std::move(quotient));
}

std::string to_string(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int k = a.degree(); k >= 0; --k) {
        const Int& c = a.coefficient(k);
        if (c.is_zero()) continue;
        const bool first = out.empty();
        const bool negative = c.signum() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Int magnitude = c.abs();
        const bool unit = magnitude == Int(1);
        if (k == 0) {
            out += to_string(magnitude);
        } else {
            if (!unit) {
                out += to_string(magnitude);
                out += "*";
            }
            out += "x";
            if (k > 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& a) { return os << to_string(a); }

}  // namespace exactlin
