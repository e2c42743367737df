#pragma once

#include <cstdint>

namespace evograph {

/**
 * Counter-based deterministic random stream (SplitMix64 output function).
 *
 * A stream is a pure function of (seed, stream, counter), so runs are
 * byte-reproducible across platforms and any (seed, stream) pair yields an
 * independent sequence. Period per stream is 2^64 counter values.
 */
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream), base_(derive_base(seed, stream)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64() {
    std::uint64_t z = base_ + kGamma * ++counter_;
    return mix(z);
  }

  /// Unbiased integer in [0, bound); bound must be >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool coin() { return (next_u64() >> 63) != 0; }

  /// True with probability p (p in [0,1]).
  bool bernoulli(double p) { return unit() < p; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t derive_base(std::uint64_t seed, std::uint64_t stream) {
    return mix(seed + kGamma * mix(stream + kGamma));
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace evograph
