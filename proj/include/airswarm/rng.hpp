#pragma once

#include <cstdint>

namespace airswarm {

/// Deterministic counter-based generator built on the SplitMix64 finalizer.
/// Every draw is a pure function of (key, counter), and substreams are derived
/// by hashing a stream id into the key, so draws for (seed, robot id, step)
/// are independent of evaluation order. This is what makes simulation output
/// reproducible and permutation-invariant across agents.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

    /// Derives an independent substream, e.g. per robot id or per step.
    CounterRng stream(std::uint64_t id) const {
        CounterRng child(*this);
        child.key_ = mix(key_ ^ mix(id + 0xbb67ae8584caa73bULL));
        child.counter_ = 0;
        return child;
    }

    std::uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ULL;
        return mix(key_ + counter_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    // SplitMix64 finalizer (Steele, Lea & Flood 2014).
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_{0};
};

}  // namespace airswarm
