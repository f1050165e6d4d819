#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace sos {

/// Seeded generator used for every random draw in a world.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The std distributions are implementation-defined, so the
/// transforms below are written out explicitly:
///   - uniform01: top 53 bits scaled to [0, 1)
///   - uniform_index(n): rejection below 2^64 mod n, then modulo
///   - normal: Marsaglia polar method, the second value of each pair cached
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n);

    /// Standard normal draw.
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace sos
