#include "rng.hpp"

#include <algorithm>
#include <vector>

namespace hsx {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ULL * (trial + 1)));
}

std::uint64_t salt_seed(std::uint64_t seed, std::string_view label) {
    // FNV-1a over the label, folded into the seed.
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return mix64(seed ^ h);
}

Rational random_rational(SplitMix64& rng) {
    long num = rng.uniform(-99, 99);
    long den = rng.uniform(1, 20);
    return Rational(num, den);
}

Rational random_nonzero_rational(SplitMix64& rng) {
    for (;;) {
        Rational r = random_rational(rng);
        if (!r.is_zero()) return r;
    }
}

Nodes random_nodes(SplitMix64& rng, std::size_t n, bool distinct) {
    std::vector<Rational> vs;
    vs.reserve(n);
    while (vs.size() < n) {
        Rational r = random_rational(rng);
        if (distinct && std::find(vs.begin(), vs.end(), r) != vs.end()) continue;
        vs.push_back(std::move(r));
    }
    return Nodes(std::move(vs));
}

Poly random_poly(SplitMix64& rng, std::size_t degree) {
    std::vector<Rational> cs;
    cs.reserve(degree + 1);
    for (std::size_t k = 0; k < degree; ++k) cs.push_back(random_rational(rng));
    cs.push_back(random_nonzero_rational(rng));
    return Poly(std::move(cs));
}

}  // namespace hsx
