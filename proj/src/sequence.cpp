#include "exactreal/sequence.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace exact {

RatSeq seq_from_recurrence(std::string description, Rat first,
                           std::function<Rat(std::uint64_t, const Rat&)> step) {
    struct Cache {
        std::mutex m;
        std::vector<Rat> known;
    };
    auto cache = std::make_shared<Cache>();
    cache->known.push_back(std::move(first));
    return RatSeq(std::move(description),
                  [cache, step = std::move(step)](std::uint64_t n) {
                      std::lock_guard<std::mutex> lock(cache->m);
                      while (cache->known.size() <= n) {
                          std::uint64_t k = cache->known.size();
                          cache->known.push_back(step(k, cache->known.back()));
                      }
                      return cache->known[n];
                  });
}

RatSeq seq_constant(const Rat& q) {
    return RatSeq("const " + q.str(), [q](std::uint64_t) { return q; });
}

RatSeq seq_zero() {
    return seq_constant(Rat(0));
}

RatSeq seq_power_decay(std::uint64_t base) {
    return seq_scaled_power_decay(Rat(1), base);
}

RatSeq seq_scaled_power_decay(const Rat& scale, std::uint64_t base) {
    if (base < 2) throw DomainError("power-decay base must be >= 2");
    std::string desc = scale == Rat(1) ? std::to_string(base) + "^-n"
                                       : scale.str() + "/" + std::to_string(base) + "^n";
    return RatSeq(std::move(desc), [scale, base](std::uint64_t n) {
        return scale / Rat(Int::from_nat(pow(Nat(base), n)));
    });
}

RatSeq seq_harmonic() {
    return seq_scaled_harmonic(Rat(1));
}

RatSeq seq_scaled_harmonic(const Rat& scale) {
    return RatSeq(scale.str() + "/(n+1)", [scale](std::uint64_t n) {
        return scale / Rat(static_cast<long long>(n) + 1);
    });
}

RatSeq seq_alternating_harmonic() {
    return RatSeq("(-1)^n/(n+1)", [](std::uint64_t n) {
        Rat r = Rat(1) / Rat(static_cast<long long>(n) + 1);
        return n % 2 == 0 ? r : -r;
    });
}

RatSeq seq_alternating_unit() {
    return RatSeq("(-1)^n", [](std::uint64_t n) { return n % 2 == 0 ? Rat(1) : Rat(-1); });
}

RatSeq seq_index() {
    return RatSeq("n", [](std::uint64_t n) { return Rat(static_cast<long long>(n)); });
}

RatSeq seq_partial_sums(std::string description, std::function<Rat(std::uint64_t)> term) {
    return seq_from_recurrence(std::move(description), Rat(0),
                               [term = std::move(term)](std::uint64_t n, const Rat& prev) {
                                   return prev + term(n);
                               });
}

namespace {

RatSeq zip(const char* op, const RatSeq& a, const RatSeq& b, Rat (*f)(const Rat&, const Rat&)) {
    std::string desc = "(" + a.description() + " " + op + " " + b.description() + ")";
    return RatSeq(std::move(desc), [a, b, f](std::uint64_t n) { return f(a(n), b(n)); });
}

} // namespace

RatSeq seq_add(const RatSeq& a, const RatSeq& b) {
    return zip("+", a, b, +[](const Rat& x, const Rat& y) { return x + y; });
}

RatSeq seq_sub(const RatSeq& a, const RatSeq& b) {
    return zip("-", a, b, +[](const Rat& x, const Rat& y) { return x - y; });
}

RatSeq seq_mul(const RatSeq& a, const RatSeq& b) {
    return zip("*", a, b, +[](const Rat& x, const Rat& y) { return x * y; });
}

RatSeq seq_interleave(const RatSeq& a, const RatSeq& b) {
    std::string desc = "interleave(" + a.description() + ", " + b.description() + ")";
    return RatSeq(std::move(desc), [a, b](std::uint64_t n) {
        return n % 2 == 0 ? a(n / 2) : b(n / 2);
    });
}

CauchyVerdict check_cauchy_to_depth(const RatSeq& s, const Rat& eps, std::uint64_t depth) {
    if (!eps.is_positive()) throw InvalidTolerance();
    if (depth < 1) throw DomainError("cauchy check needs depth >= 1");

    std::vector<Rat> terms;
    terms.reserve(depth + 1);
    for (std::uint64_t i = 0; i <= depth; ++i) terms.push_back(s(i));

    std::optional<CauchyCounterexample> first_violation;
    for (std::uint64_t m = 0; m < depth; ++m) {
        bool anchored = true;
        for (std::uint64_t n = m + 1; n <= depth; ++n) {
            Rat gap = abs(terms[m] - terms[n]);
            if (gap >= eps) {
                if (!first_violation) first_violation = CauchyCounterexample{m, n, gap};
                anchored = false;
                break;
            }
        }
        if (anchored) {
            CauchyVerdict v;
            v.holds_to_depth = true;
            v.anchor = m;
            return v;
        }
    }
    CauchyVerdict v;
    v.counterexample = first_violation;
    return v;
}

} // namespace exact
