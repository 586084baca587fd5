#pragma once

#include <cstdint>
#include <string_view>

#include "nodes.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace hsx {

// SplitMix64: tiny splittable generator with platform-independent output,
// so seeded verification reports are reproducible bit for bit everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, range), range >= 1.
    std::uint64_t bounded(std::uint64_t range) {
        std::uint64_t threshold = (-range) % range;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % range;
        }
    }

    // Inclusive on both ends.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        bounded(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(std::uint64_t one_in) { return bounded(one_in) == 0; }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

// Independent per-trial stream derived from (seed, trial); trials can be
// evaluated in any order or sharded without changing their inputs.
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial);

// Mixes a label into a seed (used to give each verification suite its own
// stream family under one user-facing seed).
std::uint64_t salt_seed(std::uint64_t seed, std::string_view label);

// Numerators uniform in [-99, 99], denominators uniform in [1, 20].
Rational random_rational(SplitMix64& rng);
Rational random_nonzero_rational(SplitMix64& rng);

// Tuple of n values; rejection-samples to pairwise distinctness on request.
Nodes random_nodes(SplitMix64& rng, std::size_t n, bool distinct);

// Polynomial of exact degree N (nonzero leading coefficient).
Poly random_poly(SplitMix64& rng, std::size_t degree);

}  // namespace hsx
