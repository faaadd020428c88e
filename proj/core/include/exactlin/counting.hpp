#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "exactlin/integer.hpp"
#include "exactlin/ring.hpp"

namespace exactlin {

/// Tally of ring operations, kept per thread by CountingInt.
struct OpCounts {
    std::uint64_t additions = 0;
    std::uint64_t subtractions = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t negations = 0;
    std::uint64_t exact_divisions = 0;

    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Integer ring element that counts every ring operation performed on the
/// current thread. Drop-in replacement for Int wherever a Ring is expected;
/// used to measure how many multiplications and divisions the algorithms
/// actually spend.
class CountingInt {
public:
    CountingInt() = default;
    CountingInt(long long value) : value_(value) {}
    explicit CountingInt(Int value) : value_(std::move(value)) {}

    static CountingInt zero() { return CountingInt(); }
    static CountingInt one() { return CountingInt(1); }

    /// Zeroes this thread's tally.
    static void reset_counts() { counts_ = OpCounts{}; }
    static const OpCounts& counts() { return counts_; }

    const Int& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    friend CountingInt operator+(const CountingInt& a, const CountingInt& b) {
        ++counts_.additions;
        return CountingInt(a.value_ + b.value_);
    }
    friend CountingInt operator-(const CountingInt& a, const CountingInt& b) {
        ++counts_.subtractions;
        return CountingInt(a.value_ - b.value_);
    }
    friend CountingInt operator*(const CountingInt& a, const CountingInt& b) {
        ++counts_.multiplications;
        return CountingInt(a.value_ * b.value_);
    }
    friend CountingInt operator-(const CountingInt& a) {
        ++counts_.negations;
        return CountingInt(-a.value_);
    }
    friend CountingInt exact_div(const CountingInt& a, const CountingInt& b) {
        ++counts_.exact_divisions;
        return CountingInt(exact_div(a.value_, b.value_));
    }

    friend bool operator==(const CountingInt&, const CountingInt&) = default;

    friend std::string to_string(const CountingInt& a) { return to_string(a.value_); }

private:
    inline static thread_local OpCounts counts_{};

    Int value_;
};

static_assert(Ring<CountingInt>);

}  // namespace exactlin
