#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace cyclo::test {

// Fixed seed unless CARLITZ_TEST_SEED is set.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("CARLITZ_TEST_SEED")) return std::stoull(s);
    return 20240611;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

} // namespace cyclo::test
