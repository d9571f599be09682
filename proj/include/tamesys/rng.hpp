#pragma once

#include <cstdint>

namespace tamesys {

/// SplitMix64 generator. Used for every randomized routine so that a seed
/// determines the run bit-for-bit on every platform (std::uniform_int_distribution
/// is implementation-defined and would break reproducibility).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n). n must be positive. The modulo bias is
    /// irrelevant here (n is tiny compared to 2^64).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

}  // namespace tamesys
