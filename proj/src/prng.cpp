#include "tabled/prng.hpp"

namespace tabled::prng {

bool valid_seed(int64_t seed) {
    return seed >= kMinSeed && seed <= kMaxSeed;
}

Outcome<int32_t> checked_seed(int64_t seed) {
    if (!valid_seed(seed)) {
        return BenchError::make(ErrCode::InvalidSeed,
                                "seed must be in [1, 2^31-2], got " + std::to_string(seed));
    }
    return static_cast<int32_t>(seed);
}

int32_t next(int32_t state) {
    return static_cast<int32_t>(static_cast<int64_t>(state) * kMultiplier % kModulus);
}

int64_t bounded(int32_t next_value, int64_t k) {
    return static_cast<int64_t>(next_value) * k / kModulus;
}

} // namespace tabled::prng
