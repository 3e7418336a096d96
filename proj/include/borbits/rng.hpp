#pragma once

#include <cstdint>

#include "borbits/rational.hpp"

namespace borbits {

// 64-bit linear congruential generator,
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64),
// draws taken from the high 32 bits.  Fixed here (and documented in the
// README) so that seeded runs reproduce bit-for-bit everywhere.
class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // Uniform draw from {0, ..., m-1}; m must be positive.
    std::uint32_t below(std::uint32_t m) {
        return static_cast<std::uint32_t>((next() >> 32) % m);
    }

    // Rational with |numerator| <= bound and 1 <= denominator <= max(bound, 1).
    Rational rational(int bound) {
        if (bound <= 0) return Rational(0);
        const auto span = static_cast<std::uint32_t>(2 * bound + 1);
        const int num = static_cast<int>(below(span)) - bound;
        const int den = 1 + static_cast<int>(below(static_cast<std::uint32_t>(bound)));
        return Rational(num, den);
    }

    Rational nonzero_rational(int bound) {
        if (bound <= 0) return Rational(1);
        Rational r = rational(bound);
        while (r == 0) r = rational(bound);
        return r;
    }

  private:
    std::uint64_t state_;
};

}  // namespace borbits
