// Counter-based uniform random source with addressable substreams.
//
// Every draw is a pure function of (seed, stream, index), so Monte Carlo
// results do not depend on evaluation order or worker count. Streams are
// keyed by (repetition, stratum, role); the role tag separates the data
// draws from the U and U-tilde randomization draws.

#pragma once

#include <cstdint>

namespace randpv {

enum class Role : std::uint8_t { u = 0, u_tilde = 1, data = 2 };

struct SeedKey {
    std::uint64_t seed = 0;
    std::uint64_t rep = 0;
    std::uint64_t stratum = 0;
    Role role = Role::u;
};

// Uniform draw in the open interval (0,1); never returns 0 or 1 exactly.
double uniform(const SeedKey& key, std::uint64_t index = 0);

// Raw 64-bit output of the keyed counter hash (exposed for tests).
std::uint64_t mix_bits(const SeedKey& key, std::uint64_t index);

}  // namespace randpv
