#pragma once

#include <cstdint>
#include <string_view>

namespace ueq {

/// SplitMix64 (Steele/Lea/Flood mixer, as popularized by Vigna). Chosen as
/// the harness generator because it is tiny, fully specified by integer
/// arithmetic, and therefore reproducible across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform in [0, n); unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// Sub-seed for (master seed, tag, index): the tag is folded in with
  /// FNV-1a, then everything is passed through the SplitMix64 finalizer.
  /// Identical inputs give identical sub-seeds on every platform, so trials
  /// can run in any order (or in parallel) without changing a report.
  static std::uint64_t derive(std::uint64_t master, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a offset basis
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;  // FNV-1a prime
    }
    return mix(mix(master ^ h) + (index + 1) * 0x9E3779B97F4A7C15ULL);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace ueq
