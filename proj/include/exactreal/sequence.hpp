#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "exactreal/rational.hpp"

namespace exact {

/// Lazy, deterministic rational sequence: a pure mapping from index to Rat,
/// total for every index, with a human-readable provenance string.
/// Evaluating the same index twice yields identical rationals.
class RatSeq {
public:
    using Gen = std::function<Rat(std::uint64_t)>;

    RatSeq(std::string description, Gen gen)
        : desc_(std::move(description)), gen_(std::move(gen)) {}

    Rat operator()(std::uint64_t n) const { return gen_(n); }

    const std::string& description() const { return desc_; }

private:
    std::string desc_;
    Gen gen_;
};

/// Sequence defined by a recurrence q_0 = first, q_n = step(n, q_{n-1}).
/// Terms are cached behind a mutex; the cache is shared by copies and is
/// observationally invisible (same values, concurrent readers safe).
RatSeq seq_from_recurrence(std::string description, Rat first,
                           std::function<Rat(std::uint64_t, const Rat&)> step);

RatSeq seq_constant(const Rat& q);
RatSeq seq_zero();

/// q_n = base^-n (base >= 2), e.g. seq_power_decay(2) is 1, 1/2, 1/4, ...
RatSeq seq_power_decay(std::uint64_t base);

/// q_n = scale * base^-n.
RatSeq seq_scaled_power_decay(const Rat& scale, std::uint64_t base);

/// q_n = 1/(n+1): the harmonic tail starting at 1.
RatSeq seq_harmonic();

/// q_n = scale/(n+1).
RatSeq seq_scaled_harmonic(const Rat& scale);

/// q_n = (-1)^n/(n+1).
RatSeq seq_alternating_harmonic();

/// q_n = (-1)^n.
RatSeq seq_alternating_unit();

/// q_n = n.
RatSeq seq_index();

/// Partial sums q_n = sum_{k=1..n} term(k); q_0 = 0.
RatSeq seq_partial_sums(std::string description, std::function<Rat(std::uint64_t)> term);

RatSeq seq_add(const RatSeq& a, const RatSeq& b);
RatSeq seq_sub(const RatSeq& a, const RatSeq& b);
RatSeq seq_mul(const RatSeq& a, const RatSeq& b);

/// a(0), b(0), a(1), b(1), ...
RatSeq seq_interleave(const RatSeq& a, const RatSeq& b);

struct CauchyCounterexample {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    Rat gap; // |q_m - q_n| >= eps, m < n <= depth
};

/// Verdict of the finite-depth Cauchy check. holds_to_depth means some
/// anchor index m < depth has |q_m - q_n| < eps for every n in (m, depth];
/// it is evidence, not a proof, of the Cauchy property.
struct CauchyVerdict {
    bool holds_to_depth = false;
    std::optional<std::uint64_t> anchor;                 // set when holds_to_depth
    std::optional<CauchyCounterexample> counterexample;  // set otherwise

    explicit operator bool() const { return holds_to_depth; }
};

/// Scans pairs m < n <= depth for the Cauchy condition at tolerance eps:
/// searches for an anchor m whose whole tail up to depth stays within eps.
/// If every anchor fails, reports the first violating pair found. Throws
/// InvalidTolerance for eps <= 0 and DomainError for depth < 1.
CauchyVerdict check_cauchy_to_depth(const RatSeq& s, const Rat& eps, std::uint64_t depth);

} // namespace exact
