#pragma once

#include <cstdint>

namespace rci {

// Counter-based generator: output i is a SplitMix64-style finalizer applied
// to seed + i * golden gamma. Stateless apart from the counter, so streams
// can be split deterministically and results are identical on every platform.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(mix(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
        return mix(z);
    }

    // uniform in [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [-amplitude, amplitude]
    double next_symmetric(double amplitude) { return amplitude * (2.0 * next_unit() - 1.0); }

    // derive an independent stream (e.g. one per rollout or per sample index)
    CounterRng split(std::uint64_t stream) const { return CounterRng(seed_, stream + 1); }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace rci
