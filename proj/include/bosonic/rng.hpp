#pragma once

#include <cstdint>
#include <limits>

namespace bosonic {

/// Counter-based generator: output i of stream `key` is splitmix64(key, i).
/// Any output can be computed without the preceding ones, so independent
/// workers take disjoint streams. Worker w of a run seeded with s uses
/// stream s ^ w.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t stream_seed) : key_(mix(stream_seed)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return at(counter_++); }

  /// The i-th output of this stream, independent of the current position.
  result_type at(std::uint64_t i) const { return mix(key_ + (i + 1) * kGamma); }

  std::uint64_t position() const { return counter_; }

  /// Stream for worker `w` of a run seeded with `seed`.
  static CounterRng for_worker(std::uint64_t seed, std::uint64_t w) {
    return CounterRng(seed ^ w);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bosonic
