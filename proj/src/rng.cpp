#include "randpv/rng.hpp"

namespace randpv {
namespace {

// SplitMix64 finalizer (Steele, Lea & Flood; Vigna's fixed-increment variant).
// Used here as a mixing stage, not as a sequential generator: each input word
// is absorbed with one golden-ratio increment plus the avalanche rounds.
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t absorb(std::uint64_t state, std::uint64_t word) {
    return mix(state + kGamma + word);
}

}  // namespace

std::uint64_t mix_bits(const SeedKey& key, std::uint64_t index) {
    std::uint64_t s = mix(key.seed + kGamma);
    s = absorb(s, key.rep);
    s = absorb(s, key.stratum);
    s = absorb(s, static_cast<std::uint64_t>(key.role));
    s = absorb(s, index);
    return s;
}

double uniform(const SeedKey& key, std::uint64_t index) {
    const std::uint64_t bits = mix_bits(key, index) >> 11;  // top 53 bits
    // (bits + 0.5) / 2^53 lies in [2^-54, 1 - 2^-54]: strictly inside (0,1).
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace randpv
