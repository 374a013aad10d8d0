#pragma once

#include <cstdint>
#include <string_view>

namespace docaug {

// SplitMix64 finalizer; bijective avalanche over 64 bits.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

// FNV-1a, used to fold string identifiers into seed derivation.
constexpr std::uint64_t hash64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Child-seed derivation. The label is spread by the golden-ratio constant
// before the avalanche so consecutive labels share no structure.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t label) {
    return mix64(parent + 0x9e3779b97f4a7c15ull * (label + 1));
}

// Deterministic 64-bit generator (SplitMix64). Identical seeds give
// identical draw sequences on every platform. A stream is a cheap value
// owned by exactly one consumer; it is never shared across threads.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix64(state_);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Inclusive on both ends; consumes exactly one draw.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace docaug
