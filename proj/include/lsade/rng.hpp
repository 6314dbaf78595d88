#pragma once

#include <cstdint>
#include <random>

#include "lsade/stats.hpp"

namespace lsade {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based derivation of per-replication (or per-purpose) seeds, so a
// study sliced across threads draws the same streams as a serial run.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

// Deterministic double-precision source. The engine (std::mt19937_64) and
// both mappings below are fully specified, so streams are bit-identical
// across platforms and standard libraries:
//   - uniforms by 53-bit mantissa scaling of the top engine bits,
//   - normals by the rational inverse CDF in normal_quantile() applied to a
//     centered 53-bit uniform (never exactly 0 or 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [-1, 1).
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

  // Standard normal via inverse CDF.
  double normal() {
    const double u =
        (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return normal_quantile(u);
  }

  // Integer in [0, k), k >= 1.
  std::uint64_t below(std::uint64_t k) {
    return static_cast<std::uint64_t>(uniform01() * static_cast<double>(k));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lsade
