#include "exactreal/integer.hpp"

namespace exact {

Int::Int(long long n) {
    if (n >= 0) {
        pos_ = Nat(static_cast<unsigned long>(n));
    } else {
        // avoid overflow on LLONG_MIN
        neg_ = Nat(static_cast<unsigned long>(-(n + 1)) + 1ul);
    }
}

std::string Int::str() const {
    Int c = normalized();
    if (c.neg_.is_zero()) return c.pos_.str();
    return "-" + c.neg_.str();
}

Int div_exact(const Int& a, const Nat& d) {
    if (d.is_zero()) throw DivisionByZero();
    Int c = a.normalized();
    if (c.neg().is_zero()) return Int(c.pos() / d, Nat());
    return Int(Nat(), c.neg() / d);
}

Int floor_div(const Int& a, const Nat& d) {
    if (d.is_zero()) throw DivisionByZero();
    Int c = a.normalized();
    if (c.neg().is_zero()) return Int(c.pos() / d, Nat()); // toward zero == floor for >= 0
    // negative: floor = -ceil(|a| / d)
    Nat q = (c.neg() + (d - Nat(1ul))) / d;
    return Int(Nat(), std::move(q));
}

Int ceil_div(const Int& a, const Nat& d) {
    return -floor_div(-a, d);
}

} // namespace exact
