#pragma once

#include <cstdint>
#include <random>

#include "jorder/rational.hpp"
#include "jorder/report.hpp"

namespace jorder {

/// Deterministic random source. mt19937_64 output is pinned by the C++
/// standard, and we only consume raw 64-bit draws, so sequences are
/// identical across platforms for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t u64() { return gen_(); }

    /// Uniform-ish integer in [0, n). n > 0.
    long below(long n) { return static_cast<long>(u64() % static_cast<std::uint64_t>(n)); }

    /// Integer in [lo, hi], inclusive.
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

    bool chance(long one_in) { return below(one_in) == 0; }

    /// Rational with |numerator| <= bound, 1 <= denominator <= bound.
    Rational rational(long bound) {
        long num = range(-bound, bound);
        long den = range(1, bound);
        return rat(num, den);
    }

    Rational nonzero_rational(long bound) {
        for (;;) {
            Rational q = rational(bound);
            if (sign(q) != 0) return q;
        }
    }

    Rational positive_rational(long bound) {
        long num = range(1, bound);
        long den = range(1, bound);
        return rat(num, den);
    }

    /// Integer-valued rational in [-bound, bound].
    Rational integer(long bound) { return rat(range(-bound, bound)); }

private:
    std::mt19937_64 gen_;
};

} // namespace jorder
