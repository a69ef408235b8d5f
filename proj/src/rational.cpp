#include "exactreal/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace exact {

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (!den_.is_positive()) {
        throw InvalidRational("denominator must be a positive integer, got " + den_.str());
    }
}

Rat::Rat(long long num, long long den) : Rat(Int(num), Int(den)) {}

Rat Rat::make(Int num, Int den) {
    if (den.is_negative()) { // (a, b) = (-a, -b); arithmetic may produce b < 0 via division
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den)).normalized();
}

Rat Rat::normalized() const {
    if (num_.is_zero()) return Rat(Int(0), Int(1));
    Nat g = gcd(num_.magnitude(), den_.magnitude());
    Rat r;
    r.num_ = div_exact(num_, g);
    r.den_ = div_exact(den_, g);
    return r;
}

Rat Rat::operator/(const Rat& o) const {
    if (o.num_.is_zero()) throw DivisionByZero();
    return make(num_ * o.den_, den_ * o.num_);
}

Int Rat::floor() const {
    return floor_div(num_, den_.magnitude());
}

Int Rat::ceil() const {
    return ceil_div(num_, den_.magnitude());
}

std::string Rat::str() const {
    Rat c = normalized();
    if (c.den_ == Int(1)) return c.num_.str();
    return c.num_.str() + "/" + c.den_.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rat Rat::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw InvalidRational("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    auto fail = [&] { throw InvalidRational("malformed rational literal: '" + std::string(text) + "'"); };

    // a/b form
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        Int n = Int::from_nat(Nat::from_decimal(std::string(num)));
        Int d = Int::from_nat(Nat::from_decimal(std::string(den)));
        if (d.is_zero()) throw InvalidRational("zero denominator in literal: '" + std::string(text) + "'");
        Rat r(n, d);
        return (negative ? -r : r).normalized();
    }

    // decimal with optional fraction part and optional exponent
    std::string_view mantissa = s;
    long long exp10 = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        mantissa = s.substr(0, epos);
        std::string_view es = s.substr(epos + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 9) fail();
        exp10 = std::strtoll(std::string(es).c_str(), nullptr, 10);
        if (eneg) exp10 = -exp10;
    }

    std::string digits;
    std::size_t frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mantissa.substr(0, dot);
        std::string_view fp = mantissa.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp)) fail();
        digits = std::string(ip) + std::string(fp);
        frac_len = fp.size();
    } else {
        if (!all_digits(mantissa)) fail();
        digits = std::string(mantissa);
    }

    Int n = Int::from_nat(Nat::from_decimal(digits));
    long long den_exp = static_cast<long long>(frac_len) - exp10;
    Rat r = den_exp >= 0
                ? Rat(n, Int::from_nat(pow(Nat(10ul), static_cast<std::uint64_t>(den_exp))))
                : Rat(n * Int::from_nat(pow(Nat(10ul), static_cast<std::uint64_t>(-den_exp))), Int(1));
    return (negative ? -r : r).normalized();
}

Rat abs(const Rat& r) {
    return r.is_negative() ? -r : r;
}

Rat min(const Rat& a, const Rat& b) {
    return a < b ? a : b;
}

Rat max(const Rat& a, const Rat& b) {
    return a < b ? b : a;
}

Rat pow2(std::int64_t bits) {
    Nat p = pow(Nat(2ul), static_cast<std::uint64_t>(bits < 0 ? -bits : bits));
    if (bits >= 0) return Rat(Int::from_nat(std::move(p)));
    return Rat(Int(1), Int::from_nat(std::move(p)));
}

Rat dyadic_ceil(const Rat& r, std::uint64_t bits) {
    Rat scale = pow2(static_cast<std::int64_t>(bits));
    Int k = (r * scale).ceil();
    return Rat(std::move(k)) / scale;
}

} // namespace exact
