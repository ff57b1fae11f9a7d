#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>

namespace hyperalloc {

/// Independent sub-streams drawn from one (master_seed, trial_index) pair.
enum class StreamPurpose : std::uint64_t {
  kPlacement = 1,
  kFading = 2,
  kGraphColoring = 3,
  kHypergraphColoring = 4,
  kSweepPoint = 5,
};

namespace detail {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index,
                                    StreamPurpose purpose) {
  std::uint64_t h = detail::mix64(master_seed);
  h = detail::mix64(h ^ index);
  return detail::mix64(h ^ static_cast<std::uint64_t>(purpose));
}

// A seeded 64-bit Mersenne Twister with portable sampling helpers. The
// standard distributions are implementation-defined, so samples here are
// built directly from engine output to stay bit-identical across toolchains.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream derive(std::uint64_t master_seed, std::uint64_t index,
                             StreamPurpose purpose) {
    return RandomStream(derive_seed(master_seed, index, purpose));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on {0, ..., n-1}; n must be positive.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::size_t>(x % bound);
  }

  /// Exp(1) sample by inversion.
  double exponential() { return -std::log1p(-uniform()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperalloc
