#pragma once

#include <cstdint>
#include <random>

namespace interplab {

/// Seeded generator with platform-independent output.
///
/// The engine is std::mt19937_64, whose output sequence is fully specified by
/// the standard. Floating-point draws are built from the top 53 bits of each
/// 64-bit word, so they do not depend on the library's distribution classes
/// (which are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound)); }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace interplab
