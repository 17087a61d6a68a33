#include "dicelab/sampling.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dicelab {

const char* to_string(SampleMethod m) {
  return m == SampleMethod::ExactDp ? "exact" : "mcmc";
}

SampleMethod parse_method(const std::string& name) {
  if (name == "exact") return SampleMethod::ExactDp;
  if (name == "mcmc") return SampleMethod::SwapMcmc;
  throw std::invalid_argument("unknown sampler method: " + name);
}

std::int64_t SamplerConfig::burn_in_steps() const {
  return mcmc_burn_in >= 0 ? mcmc_burn_in : 50ll * n * n;
}

std::int64_t SamplerConfig::thinning_steps() const {
  return mcmc_thinning >= 0 ? mcmc_thinning : static_cast<std::int64_t>(n) * n;
}

void SamplerConfig::validate() const {
  if (n < 1) throw std::invalid_argument("sampler: n must be >= 1");
  if (thinning_steps() < 1) throw std::invalid_argument("sampler: thinning must be >= 1");
}

ExactSampler::ExactSampler(std::shared_ptr<const CountTable> table)
    : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("ExactSampler: null table");
}

namespace {

// Uniform BigInt in [0, bound), masked rejection on the top word.
BigInt uniform_bigint_below(CounterRng& rng, const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_bigint_below: bound must be >= 1");
  if (bound == 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - (words - 1) * 64;
  const std::uint64_t top_mask =
      top_bits >= 64 ? ~0ull : ((1ull << top_bits) - 1);
  for (;;) {
    BigInt v = rng() & top_mask;
    for (unsigned w = 1; w < words; ++w) {
      v <<= 64;
      v |= rng();
    }
    if (v < bound) return v;
  }
}

}  // namespace

ProperDie ExactSampler::draw(CounterRng& rng) const {
  const int n = table_->sides();
  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(n));
  int parts = n;
  long long sum = static_cast<long long>(n) * (n + 1) / 2;
  int max_face = n;
  while (parts > 0) {
    const BigInt& total = table_->cell(parts, static_cast<int>(sum), max_face);
    BigInt r = uniform_bigint_below(rng, total);
    int hi = std::min<long long>(max_face, sum - (parts - 1));
    Face chosen = 0;
    for (int v = hi; v >= 1; --v) {
      const BigInt& c = table_->cell(parts - 1, static_cast<int>(sum - v), v);
      if (r < c) {
        chosen = v;
        break;
      }
      r -= c;
    }
    faces.push_back(chosen);
    --parts;
    sum -= chosen;
    max_face = chosen;
  }
  std::reverse(faces.begin(), faces.end());
  return ProperDie(std::move(faces));
}

McmcSampler::McmcSampler(int n, std::int64_t burn_in, std::int64_t thinning, CounterRng rng)
    : n_(n), thinning_(thinning), rng_(rng) {
  if (n < 1) throw std::invalid_argument("McmcSampler: n must be >= 1");
  if (thinning < 1) throw std::invalid_argument("McmcSampler: thinning must be >= 1");
  if (burn_in < 0) throw std::invalid_argument("McmcSampler: burn-in must be >= 0");
  faces_.resize(static_cast<std::size_t>(n));
  mult_.assign(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 0; i < n; ++i) {
    faces_[static_cast<std::size_t>(i)] = i + 1;
    mult_[static_cast<std::size_t>(i) + 1] = 1;
  }
  for (std::int64_t s = 0; s < burn_in; ++s) step();
}

McmcSampler::McmcSampler(const SamplerConfig& config)
    : McmcSampler(config.n, config.burn_in_steps(), config.thinning_steps(),
                  CounterRng(config.seed)) {}

void McmcSampler::step() {
  const int n = n_;
  if (n < 2) return;
  const std::size_t i = uniform_below(rng_, static_cast<std::uint64_t>(n));
  std::size_t j = uniform_below(rng_, static_cast<std::uint64_t>(n - 1));
  if (j >= i) ++j;
  const Face a = faces_[i];
  const Face b = faces_[j];
  const int s = a + b;
  // uniform split of s into two faces within [1, n]; the current split is
  // always among the candidates, so the range is never empty
  const int lo = std::max(1, s - n);
  const int hi = std::min(n, s - 1);
  const Face u = static_cast<Face>(
      lo + static_cast<int>(uniform_below(rng_, static_cast<std::uint64_t>(hi - lo + 1))));
  const Face v = static_cast<Face>(s - u);
  if (u == a && v == b) return;

  // target is uniform over multisets, so weight tuples by the inverse of
  // their representation count: accept with min(1, prod m'! / prod m!),
  // evaluated incrementally over the four changed values
  long long den = 1, num = 1;
  auto& m = mult_;
  m[static_cast<std::size_t>(a)]--;
  den *= m[static_cast<std::size_t>(a)] + 1;
  m[static_cast<std::size_t>(b)]--;
  den *= m[static_cast<std::size_t>(b)] + 1;
  m[static_cast<std::size_t>(u)]++;
  num *= m[static_cast<std::size_t>(u)];
  m[static_cast<std::size_t>(v)]++;
  num *= m[static_cast<std::size_t>(v)];
  const bool accept =
      num >= den ||
      uniform_below(rng_, static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num);
  if (!accept) {
    m[static_cast<std::size_t>(u)]--;
    m[static_cast<std::size_t>(v)]--;
    m[static_cast<std::size_t>(a)]++;
    m[static_cast<std::size_t>(b)]++;
    return;
  }
  faces_[i] = u;
  faces_[j] = v;
}

ProperDie McmcSampler::draw() {
  for (std::int64_t s = 0; s < thinning_; ++s) step();
  return ProperDie(faces_);
}

ProperDie sample_exact(const CountTable& table, CounterRng& rng) {
  // non-owning wrapper; callers doing bulk draws should hold an ExactSampler
  std::shared_ptr<const CountTable> alias(&table, [](const CountTable*) {});
  return ExactSampler(alias).draw(rng);
}

ProperDie sample_mcmc(int n, const SamplerConfig& config, CounterRng& rng) {
  if (config.method != SampleMethod::SwapMcmc)
    throw std::invalid_argument("sample_mcmc: config.method must be mcmc");
  // key a fresh chain off the caller's stream; rng advances one tick
  McmcSampler chain(n, config.burn_in_steps(), config.thinning_steps(), rng.derive(rng()));
  return chain.draw();
}

namespace {

class ExactStream final : public DieSampler {
 public:
  explicit ExactStream(const SamplerConfig& config)
      : sampler_(shared_count_table(config.n)), rng_(CounterRng(config.seed)) {}
  ProperDie draw() override { return sampler_.draw(rng_); }
  int sides() const override { return sampler_.sides(); }

 private:
  ExactSampler sampler_;
  CounterRng rng_;
};

class McmcStream final : public DieSampler {
 public:
  explicit McmcStream(const SamplerConfig& config) : chain_(config) {}
  ProperDie draw() override { return chain_.draw(); }
  int sides() const override { return chain_.sides(); }

 private:
  McmcSampler chain_;
};

}  // namespace

std::unique_ptr<DieSampler> make_sampler(const SamplerConfig& config) {
  config.validate();
  if (config.method == SampleMethod::ExactDp) return std::make_unique<ExactStream>(config);
  return std::make_unique<McmcStream>(config);
}

std::vector<ProperDie> sample_distinct(DieSampler& sampler, int k, int max_attempts) {
  if (k < 1) throw std::invalid_argument("sample_distinct: k must be >= 1");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<ProperDie> set;
    set.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) set.push_back(sampler.draw());
    bool distinct = true;
    for (int i = 0; i < k && distinct; ++i)
      for (int j = i + 1; j < k; ++j)
        if (set[static_cast<std::size_t>(i)] == set[static_cast<std::size_t>(j)]) {
          distinct = false;
          break;
        }
    if (distinct) return set;
  }
  std::ostringstream os;
  os << "sample_distinct: no " << k << " distinct dice after " << max_attempts
     << " attempts (n = " << sampler.sides() << " may have too few proper dice)";
  throw resource_limit_error(os.str());
}

std::array<ProperDie, 3> sample_triple(DieSampler& sampler, int max_attempts) {
  auto v = sample_distinct(sampler, 3, max_attempts);
  return {std::move(v[0]), std::move(v[1]), std::move(v[2])};
}

}  // namespace dicelab
