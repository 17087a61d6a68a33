#include <doctest.h>

#include <cmath>
#include <map>

#include "dicelab/enumeration.hpp"
#include "dicelab/sampling.hpp"

using namespace dicelab;

TEST_CASE("counter rng determinism and stream independence") {
  CounterRng a(123), b(123), c(124);
  for (int i = 0; i < 64; ++i) CHECK(a() == b());
  bool differs = false;
  CounterRng a2(123);
  for (int i = 0; i < 64; ++i) differs |= a2() != c();
  CHECK(differs);

  CounterRng root(5);
  CounterRng s1 = root.derive(1), s2 = root.derive(2), s1b = root.derive(1);
  bool stream_differs = false;
  for (int i = 0; i < 64; ++i) {
    const auto v1 = s1();
    CHECK(v1 == s1b());
    stream_differs |= v1 != s2();
  }
  CHECK(stream_differs);
}

TEST_CASE("uniform_below stays in range") {
  CounterRng rng(9);
  CHECK(uniform_below(rng, 1) == 0);
  for (std::uint64_t bound : {2ull, 3ull, 10ull, 1000ull, (1ull << 40) + 7}) {
    for (int i = 0; i < 200; ++i) CHECK(uniform_below(rng, bound) < bound);
  }
  CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
}

TEST_CASE("samplers are deterministic per seed") {
  for (SampleMethod method : {SampleMethod::ExactDp, SampleMethod::SwapMcmc}) {
    SamplerConfig config;
    config.n = 6;
    config.method = method;
    config.seed = 99;
    auto s1 = make_sampler(config);
    auto s2 = make_sampler(config);
    for (int i = 0; i < 50; ++i) CHECK(s1->draw() == s2->draw());
  }
}

TEST_CASE("single-die universes") {
  for (SampleMethod method : {SampleMethod::ExactDp, SampleMethod::SwapMcmc}) {
    SamplerConfig config;
    config.n = 1;
    config.method = method;
    auto s = make_sampler(config);
    for (int i = 0; i < 10; ++i) CHECK(s->draw().faces() == std::vector<Face>{1});
  }
}

TEST_CASE("both samplers split n=3 evenly") {
  const double sigma = std::sqrt(0.25 / 20'000);
  for (SampleMethod method : {SampleMethod::ExactDp, SampleMethod::SwapMcmc}) {
    SamplerConfig config;
    config.n = 3;
    config.method = method;
    config.seed = 11;
    auto s = make_sampler(config);
    int standard = 0;
    for (int i = 0; i < 20'000; ++i) standard += s->draw().faces() == std::vector<Face>{1, 2, 3};
    const double freq = standard / 20'000.0;
    CHECK(std::abs(freq - 0.5) < 4 * sigma);
  }
}

TEST_CASE("mcmc matches the exact uniform target on n=4") {
  SamplerConfig config;
  config.n = 4;
  config.method = SampleMethod::SwapMcmc;
  config.seed = 3;
  auto s = make_sampler(config);
  std::map<Die, int> counts;
  const int draws = 25'000;
  for (int i = 0; i < draws; ++i) ++counts[s->draw()];
  CHECK(counts.size() == 5);
  double chi2 = 0;
  const double expected = draws / 5.0;
  for (const auto& [die, k] : counts) chi2 += (k - expected) * (k - expected) / expected;
  CHECK(chi2 < 18.47);  // 99.9% quantile, 4 dof
}

TEST_CASE("every sampled die is proper") {
  for (SampleMethod method : {SampleMethod::ExactDp, SampleMethod::SwapMcmc}) {
    SamplerConfig config;
    config.n = 7;
    config.method = method;
    config.seed = 21;
    auto s = make_sampler(config);
    for (int i = 0; i < 1000; ++i) CHECK(validate_proper(s->draw()));
  }
}

TEST_CASE("one-shot draws differ call to call") {
  auto table = shared_count_table(5);
  CounterRng rng(17);
  bool differs = false;
  const ProperDie first = sample_exact(*table, rng);
  for (int i = 0; i < 20 && !differs; ++i) differs = !(sample_exact(*table, rng) == first);
  CHECK(differs);

  SamplerConfig config;
  config.n = 5;
  config.method = SampleMethod::SwapMcmc;
  CounterRng rng2(18);
  bool differs2 = false;
  const ProperDie first2 = sample_mcmc(5, config, rng2);
  for (int i = 0; i < 20 && !differs2; ++i) differs2 = !(sample_mcmc(5, config, rng2) == first2);
  CHECK(differs2);
}

namespace {
class CountingSampler final : public DieSampler {
 public:
  CountingSampler(std::unique_ptr<DieSampler> inner) : inner_(std::move(inner)) {}
  ProperDie draw() override {
    ++draws;
    return inner_->draw();
  }
  int sides() const override { return inner_->sides(); }
  std::int64_t draws = 0;

 private:
  std::unique_ptr<DieSampler> inner_;
};
}  // namespace

TEST_CASE("sample_triple yields distinct dice and rarely redraws at large n") {
  SamplerConfig config;
  config.n = 4;
  config.seed = 5;
  auto s = make_sampler(config);
  for (int i = 0; i < 500; ++i) {
    const auto t = sample_triple(*s);
    CHECK(t[0] != t[1]);
    CHECK(t[1] != t[2]);
    CHECK(t[0] != t[2]);
  }

  SamplerConfig big;
  big.n = 50;
  big.seed = 5;
  CountingSampler counting(make_sampler(big));
  const int triples = 2000;
  for (int i = 0; i < triples; ++i) (void)sample_triple(counting);
  CHECK(counting.draws == 3 * triples);  // no redraw observed at n = 50
}

TEST_CASE("sample_triple fails cleanly when no distinct triple exists") {
  for (int n : {1, 2, 3}) {  // Pr(n) = 1, 1, 2
    SamplerConfig config;
    config.n = n;
    auto s = make_sampler(config);
    CHECK_THROWS_AS(sample_triple(*s, 50), resource_limit_error);
  }
}

TEST_CASE("config validation") {
  SamplerConfig bad;
  bad.n = 0;
  CHECK_THROWS_AS(make_sampler(bad), std::invalid_argument);
  SamplerConfig bad_thin;
  bad_thin.n = 4;
  bad_thin.mcmc_thinning = 0;
  CHECK_THROWS_AS(make_sampler(bad_thin), std::invalid_argument);
}
