#pragma once

#include <cstdint>

namespace torus {

/// SplitMix64 (Steele, Lea & Flood's splittable generator as published
/// by Vigna). Chosen over std::mt19937 + distributions because its
/// output stream, including the bounded draw below, is identical on
/// every platform, which keeps scrambles and benchmarks reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-enough draw in [0, bound) via the 64x64->128 multiply-shift
  /// reduction (Lemire). Bias is negligible for the small bounds used
  /// here and the mapping is part of the documented scramble format.
  std::uint64_t below(std::uint64_t bound) {
    return std::uint64_t((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace torus
