#pragma once

#include <cstdint>
#include <random>

namespace hammersim {

/// Seeded uniform stream. Wraps mt19937_64 with explicit bit-to-double
/// conversion so sequences are reproducible across standard libraries
/// (uniform_real_distribution is not portable).
class UniformRng {
  public:
    explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        // rejection sampling keeps the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % bound;
    }

    std::uint64_t next_u64() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

} // namespace hammersim
