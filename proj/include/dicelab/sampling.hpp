// sampling.hpp -- random proper dice: an exact-uniform table sampler and a
// sum-preserving swap MCMC, both uniform over distinct dice (multisets).
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "dicelab/die.hpp"
#include "dicelab/enumeration.hpp"
#include "dicelab/rng.hpp"

namespace dicelab {

enum class SampleMethod { ExactDp, SwapMcmc };
const char* to_string(SampleMethod m);
SampleMethod parse_method(const std::string& name);

struct SamplerConfig {
  int n = 0;
  SampleMethod method = SampleMethod::ExactDp;
  std::uint64_t seed = 0;
  std::int64_t mcmc_burn_in = -1;   // -1 picks the default of 50 n^2 steps
  std::int64_t mcmc_thinning = -1;  // -1 picks the default of n^2 steps

  std::int64_t burn_in_steps() const;
  std::int64_t thinning_steps() const;
  void validate() const;  // throws std::invalid_argument
};

// Draws a proper die exactly uniformly over the Pr(n) distinct dice. Faces
// are drawn largest first: value v is taken with probability
// cell(p-1, s-v, v) / cell(p, s, m).
class ExactSampler {
 public:
  explicit ExactSampler(std::shared_ptr<const CountTable> table);
  ProperDie draw(CounterRng& rng) const;
  int sides() const { return table_->sides(); }

 private:
  std::shared_ptr<const CountTable> table_;
};

// Sum-preserving pair chain on proper dice. A step picks two face positions
// and resamples their value split uniformly over all splits inside [1, n]
// (single unit moves need n^3 steps to cross the face range; the full
// resample mixes in a few sweeps). Multisets have varying numbers of
// position representations, so acceptance uses the ratio of representation
// counts, making the stationary law uniform over distinct dice. All
// acceptance arithmetic is integer, so chains are reproducible bit for bit.
class McmcSampler {
 public:
  McmcSampler(int n, std::int64_t burn_in, std::int64_t thinning, CounterRng rng);
  explicit McmcSampler(const SamplerConfig& config);

  // Advances the chain by the thinning interval and returns the state.
  ProperDie draw();
  void step();
  int sides() const { return n_; }

 private:
  int n_;
  std::int64_t thinning_;
  std::vector<Face> faces_;  // chain state, arbitrary order
  std::vector<int> mult_;    // mult_[v] = #faces with value v
  CounterRng rng_;
};

// One-shot draws matching the two methods. The MCMC variant runs a fresh
// chain for burn_in + thinning steps.
ProperDie sample_exact(const CountTable& table, CounterRng& rng);
ProperDie sample_mcmc(int n, const SamplerConfig& config, CounterRng& rng);

// Stream of dice under a fixed config. Exact draws are independent; MCMC
// draws are successive thinned states of one chain.
class DieSampler {
 public:
  virtual ~DieSampler() = default;
  virtual ProperDie draw() = 0;
  virtual int sides() const = 0;
};

std::unique_ptr<DieSampler> make_sampler(const SamplerConfig& config);

// Three distinct dice; the whole triple is redrawn whenever any two draws
// coincide. Throws resource_limit_error after max_attempts redraws (n = 1
// and n = 2 have a single proper die, n = 3 only two).
std::array<ProperDie, 3> sample_triple(DieSampler& sampler, int max_attempts = 1000);

// k pairwise-distinct dice with the same redraw rule.
std::vector<ProperDie> sample_distinct(DieSampler& sampler, int k, int max_attempts = 1000);

}  // namespace dicelab
