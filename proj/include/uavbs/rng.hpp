#pragma once

#include <cstdint>
#include <random>

namespace uavbs {

// Seedable generator with explicit substreams. There is no global state:
// every consumer receives the Rng it draws from.
class Rng {
 public:
  using result_type = std::mt19937_64::result_type;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Independent generator for substream `stream` of this generator's seed.
  Rng substream(std::uint64_t stream) const { return Rng(seed_, stream); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to decorrelate (seed, stream) pairs.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace uavbs
