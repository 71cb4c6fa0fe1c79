#pragma once

#include "tabled/outcome.hpp"

#include <cstdint>

namespace tabled {

/// Multiplicative congruential generator, multiplier 48271 modulo 2^31-1.
/// Pinned so sampling goldens are bit-identical across platforms and
/// reimplementations. State stays in [1, 2^31-2].
namespace prng {

constexpr int32_t kModulus = 2147483647; // 2^31 - 1
constexpr int32_t kMultiplier = 48271;
constexpr int32_t kMinSeed = 1;
constexpr int32_t kMaxSeed = kModulus - 1; // 2^31 - 2

bool valid_seed(int64_t seed);
Outcome<int32_t> checked_seed(int64_t seed);

/// next = (48271 * state) mod (2^31 - 1). Precondition: valid_seed(state).
int32_t next(int32_t state);

/// Bounded draw in [0, k): floor(next * k / (2^31 - 1)). The next value never
/// equals the modulus, so the result is always < k and no rejection is needed.
int64_t bounded(int32_t next_value, int64_t k);

} // namespace prng

} // namespace tabled
