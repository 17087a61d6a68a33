// rng.hpp -- seedable counter-based random generator with derived substreams.
//
// Output is a pure function of (key, counter), so sequences are identical on
// every platform and any number of independent streams can be split off a
// single seed. Not cryptographic.
#pragma once

#include <cstdint>

namespace dicelab {

class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed);

  // Independent stream keyed by (this stream, stream_id). Derivations chain.
  CounterRng derive(std::uint64_t stream_id) const;

  result_type operator()();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~static_cast<result_type>(0); }

 private:
  struct raw_tag {};
  CounterRng(raw_tag, std::uint64_t key) : key_(key) {}
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Unbiased draw from [0, bound) by masked rejection. bound >= 1.
std::uint64_t uniform_below(CounterRng& rng, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double uniform01(CounterRng& rng);

}  // namespace dicelab
