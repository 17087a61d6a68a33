#include "dicelab/rng.hpp"

#include <stdexcept>

namespace dicelab {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

// splitmix64 finalizer
constexpr std::uint64_t mix(std::uint64_t z) {
  z += kGamma;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x646963656c6162ull)) {}

CounterRng CounterRng::derive(std::uint64_t stream_id) const {
  return CounterRng(raw_tag{}, mix(key_ ^ mix(stream_id ^ 0x737472656d00ull)));
}

CounterRng::result_type CounterRng::operator()() {
  return mix(key_ + counter_++ * kGamma);
}

std::uint64_t uniform_below(CounterRng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be >= 1");
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < bound) return v;
  }
}

double uniform01(CounterRng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace dicelab
