#pragma once

#include <cstdint>
#include <random>

namespace cgt {

// All randomized routines draw from a SeedStream created from an explicit
// seed.  Derived streams are produced with derive(), so independent phases of
// one computation stay reproducible regardless of how much randomness each
// phase consumes.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : engine_(mix(seed)) {}

  std::mt19937_64& engine() { return engine_; }

  std::uint64_t next() { return engine_(); }

  // Uniform value in [0, n).  n must be positive.
  std::uint64_t below(std::uint64_t n) {
    std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
    return d(engine_);
  }

  SeedStream derive(std::uint64_t label) {
    return SeedStream(mix(engine_() ^ (label * 0x9e3779b97f4a7c15ULL)));
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer; decorrelates nearby seeds.
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240817ULL;

}  // namespace cgt
