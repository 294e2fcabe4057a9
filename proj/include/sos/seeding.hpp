#pragma once

#include <cstdint>
#include <random>

// Counter-based seed derivation: every record draws from its own generator seeded
// by (run seed, stream, index), so results never depend on scheduling.

namespace sos::seeding {

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

[[nodiscard]] constexpr std::uint64_t mix(std::uint64_t seed, std::uint64_t value) noexcept
{
    return splitmix64(seed ^ splitmix64(value));
}

enum Stream : std::uint64_t {
    kSplitPlan = 1,
    kTrainProblems = 2,
    kValProblems = 3,
    kTestSeenProblems = 4,
    kTestNewProblems = 5,
    kStrategyChoice = 6,
};

using Rng = std::mt19937_64;

[[nodiscard]] inline Rng make_rng(std::uint64_t seed)
{
    return Rng{seed};
}

}  // namespace sos::seeding
