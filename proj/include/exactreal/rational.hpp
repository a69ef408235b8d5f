#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "exactreal/integer.hpp"

namespace exact {

/// Rational encoded as an ordered pair of integers (num, den) with den > 0.
/// Construction validates the denominator but keeps the given representation;
/// every arithmetic operation returns the canonical (gcd-reduced) form.
/// Equality and order are the cross-multiplication relations.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Int num, Int den);
    Rat(long long num, long long den);
    Rat(long long n) : num_(n), den_(1) {}
    explicit Rat(const Int& n) : num_(n), den_(1) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    /// gcd-reduced, den > 0, zero as 0/1. Idempotent and =-preserving.
    Rat normalized() const;

    /// (a, b) + (c, d) = (a*d + b*c, b*d).
    Rat operator+(const Rat& o) const { return make(num_ * o.den_ + den_ * o.num_, den_ * o.den_); }

    /// -(a, b) = (-a, b).
    Rat operator-() const { return make(-num_, den_); }

    Rat operator-(const Rat& o) const { return *this + (-o); }

    /// (a, b) * (c, d) = (a*c, b*d).
    Rat operator*(const Rat& o) const { return make(num_ * o.num_, den_ * o.den_); }

    /// (a, b) / (c, d) = (a*d, b*c), c != 0.
    Rat operator/(const Rat& o) const;

    /// Cross-multiplication order: (a, b) < (c, d) iff a*d < b*c.
    std::strong_ordering operator<=>(const Rat& o) const { return (num_ * o.den_) <=> (den_ * o.num_); }
    bool operator==(const Rat& o) const { return (*this <=> o) == std::strong_ordering::equal; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_positive() const { return num_.is_positive(); }
    bool is_negative() const { return num_.is_negative(); }

    /// Greatest integer <= *this / least integer >= *this.
    Int floor() const;
    Int ceil() const;

    /// Textual form "a/b", or "a" when the reduced denominator is 1.
    std::string str() const;

    /// Parses "a/b", decimal "d.ddd", or scientific "d.dddEk" exactly.
    /// Decimal forms become fractions over a power of ten. Throws
    /// InvalidRational on malformed input or a non-positive denominator.
    static Rat parse(std::string_view text);

private:
    // Arithmetic-result path: flips a negative denominator (the pair relation
    // permits it: (a,b) = (-a,-b)), then reduces.
    static Rat make(Int num, Int den);

    Int num_;
    Int den_;
};

Rat abs(const Rat& r);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

/// 2^-bits and 2^bits as exact rationals.
Rat pow2(std::int64_t bits);

/// Least multiple of 2^-bits that is >= r.
Rat dyadic_ceil(const Rat& r, std::uint64_t bits);

} // namespace exact
