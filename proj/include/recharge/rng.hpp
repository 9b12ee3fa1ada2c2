#pragma once

#include <cstdint>

namespace recharge {

// Counter-based deterministic generator built on the splitmix64 finalizer.
// Output i of stream s under seed x is mix(key(x, s) + i * GOLDEN), so draws
// depend only on (seed, stream, counter): every consumer gets its own stream
// and adding a consumer never perturbs the draws of existing ones. The same
// byte sequence is produced on every platform, which is what makes reruns of
// an experiment byte-identical.
class CounterRng {
  public:
    CounterRng(uint64_t seed, uint64_t stream = 0)
        : key_(mix(mix(seed + kGolden) ^ mix(stream * kGolden + 1))) {}

    uint64_t next_u64() { return mix(key_ + (ctr_++) * kGolden); }

    // uniform on [0, 1), 53 usable bits
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on {0, .., n-1} via multiply-shift; bias is O(n / 2^64)
    uint64_t next_below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    uint64_t counter() const { return ctr_; }

  private:
    static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    uint64_t key_;
    uint64_t ctr_ = 0;
};

} // namespace recharge
