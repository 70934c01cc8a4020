#pragma once

#include <cstdint>

namespace seqdig {

/// SplitMix64. The generator fixtures promise identical instances for a given
/// seed across platforms and reimplementations, so the algorithm is part of
/// the file-format contract: x += 0x9e3779b97f4a7c15; z = x; z = (z ^ z>>30) *
/// 0xbf58476d1ce4e5b9; z = (z ^ z>>27) * 0x94d049bb133111eb; return z ^ z>>31.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : x_(seed) {}

  uint64_t next() {
    uint64_t z = (x_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound); bound >= 1.
  uint64_t below(uint64_t bound) { return next() % bound; }

 private:
  uint64_t x_;
};

}  // namespace seqdig
