#pragma once

#include <cstdint>
#include <random>

namespace hypersat {

/// Seedable generator used for every random draw in the library.
///
/// Engine: std::mt19937_64 (its output sequence is fixed by the standard).
/// Bounded draws use rejection sampling on the raw 64-bit output rather than
/// std::uniform_int_distribution, whose algorithm differs between standard
/// libraries. Streams are therefore identical across platforms.
class Rng {
public:
  static constexpr int version = 1;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

} // namespace hypersat
