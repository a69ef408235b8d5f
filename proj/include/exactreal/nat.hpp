#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "exactreal/errors.hpp"

namespace exact {

/// Arbitrary-precision natural number: the base layer of the number tower.
/// Integers are ordered pairs of these, rationals are ordered pairs of
/// integers. Closed under + and *, with 0 and 1 distinguished.
class Nat {
public:
    Nat() : v_(0) {}
    Nat(unsigned long n) : v_(n) {}
    explicit Nat(mpz_class v) : v_(std::move(v)) {
        if (v_ < 0) throw DomainError("Nat cannot be negative");
    }

    static Nat from_decimal(const std::string& digits);

    bool is_zero() const { return v_ == 0; }

    Nat operator+(const Nat& o) const { return raw(v_ + o.v_); }
    Nat operator*(const Nat& o) const { return raw(v_ * o.v_); }

    /// Truncated subtraction; requires *this >= o.
    Nat operator-(const Nat& o) const {
        if (v_ < o.v_) throw DomainError("Nat subtraction underflow");
        return raw(v_ - o.v_);
    }

    Nat operator/(const Nat& o) const;
    Nat operator%(const Nat& o) const;

    std::strong_ordering operator<=>(const Nat& o) const {
        int c = cmp(v_, o.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const Nat& o) const { return v_ == o.v_; }

    std::string str() const { return v_.get_str(); }
    const mpz_class& value() const { return v_; }

private:
    static Nat raw(mpz_class v) {
        Nat n;
        n.v_ = std::move(v);
        return n;
    }

    mpz_class v_;
};

/// Euclid's algorithm on naturals. Total and exact.
Nat gcd(Nat a, Nat b);

/// base^e by repeated squaring (via GMP).
Nat pow(const Nat& base, std::uint64_t e);

} // namespace exact
