#pragma once

#include <cstdint>
#include <random>

namespace qsc {

/// splitmix64 finalizer; used to derive independent seeds from (master, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for the stream that owns item `index` under `master`. Every consumer
/// of randomness (sample generation, splits, initial parameters) draws from
/// its own stream so results do not depend on evaluation order or thread
/// count.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

/// mt19937_64 wrapper with explicitly specified double conversion, so the
/// generated sequences are pinned by the C++ standard rather than by the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, bound). Multiply-shift; bias is negligible for
  /// the small bounds used here and the mapping is reproducible.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(eng_()) * bound) >> 64);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qsc
