#include "exactreal/nat.hpp"

namespace exact {

Nat Nat::from_decimal(const std::string& digits) {
    if (digits.empty()) throw DomainError("empty digit string");
    for (char c : digits) {
        if (c < '0' || c > '9') throw DomainError("not a digit string: " + digits);
    }
    return Nat(mpz_class(digits, 10));
}

Nat Nat::operator/(const Nat& o) const {
    if (o.is_zero()) throw DivisionByZero();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return raw(std::move(q));
}

Nat Nat::operator%(const Nat& o) const {
    if (o.is_zero()) throw DivisionByZero();
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return raw(std::move(r));
}

Nat gcd(Nat a, Nat b) {
    while (!b.is_zero()) {
        Nat r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Nat pow(const Nat& base, std::uint64_t e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.value().get_mpz_t(), static_cast<unsigned long>(e));
    return Nat(std::move(r));
}

} // namespace exact
