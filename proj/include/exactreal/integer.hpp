#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "exactreal/nat.hpp"

namespace exact {

/// Integer encoded as an ordered pair of naturals (pos, neg) denoting
/// pos - neg. Any pair is a valid value; equality and order are the pair
/// relations (pos + o.neg vs neg + o.pos), never structural. Arithmetic
/// results are returned in canonical form (pos or neg is zero).
class Int {
public:
    Int() = default; // (0, 0)
    Int(Nat pos, Nat neg) : pos_(std::move(pos)), neg_(std::move(neg)) {}
    Int(long long n);

    static Int from_nat(Nat n) { return Int(std::move(n), Nat()); }

    const Nat& pos() const { return pos_; }
    const Nat& neg() const { return neg_; }

    /// (m, n) + (i, j) = (m + i, n + j), then canonicalized.
    Int operator+(const Int& o) const { return Int(pos_ + o.pos_, neg_ + o.neg_).normalized(); }

    /// -(m, n) = (n, m).
    Int operator-() const { return Int(neg_, pos_).normalized(); }

    Int operator-(const Int& o) const { return *this + (-o); }

    /// (m, n) * (i, j) = (m*i + n*j, m*j + n*i), then canonicalized.
    Int operator*(const Int& o) const {
        return Int(pos_ * o.pos_ + neg_ * o.neg_, pos_ * o.neg_ + neg_ * o.pos_).normalized();
    }

    /// Pair order: (m, n) < (i, j) iff m + j < n + i.
    std::strong_ordering operator<=>(const Int& o) const { return (pos_ + o.neg_) <=> (neg_ + o.pos_); }
    bool operator==(const Int& o) const { return (*this <=> o) == std::strong_ordering::equal; }

    /// Canonical representative: (m-n, 0) or (0, n-m).
    Int normalized() const {
        if (pos_ >= neg_) return Int(pos_ - neg_, Nat());
        return Int(Nat(), neg_ - pos_);
    }

    bool is_zero() const { return pos_ == neg_; }
    bool is_positive() const { return pos_ > neg_; }
    bool is_negative() const { return pos_ < neg_; }

    /// |value| as a natural. Canonicalizes internally.
    Nat magnitude() const {
        if (pos_ >= neg_) return pos_ - neg_;
        return neg_ - pos_;
    }

    std::string str() const;

private:
    Nat pos_;
    Nat neg_;
};

/// Exact division of a canonical integer by a natural that divides it.
Int div_exact(const Int& a, const Nat& d);

/// Floor and ceiling of a/d for d > 0 (used by the dyadic grid builders).
Int floor_div(const Int& a, const Nat& d);
Int ceil_div(const Int& a, const Nat& d);

} // namespace exact
