#pragma once

#include <cstdint>
#include <random>

namespace pierirank {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Uniform random prime with exactly `bits` bits (2..63).
uint64_t random_prime(int bits, std::mt19937_64& rng);

}  // namespace pierirank
