#include "dicelab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dicelab/enumeration.hpp"

namespace dicelab {

const char* to_string(TieHandling t) {
  return t == TieHandling::CountAsNeither ? "count-as-neither" : "exclude";
}

const char* to_string(Replacement r) {
  return r == Replacement::Distinct ? "distinct" : "with-replacement";
}

TieHandling parse_tie_handling(const std::string& name) {
  if (name == "count-as-neither") return TieHandling::CountAsNeither;
  if (name == "exclude") return TieHandling::Exclude;
  throw std::invalid_argument("unknown tie handling: " + name);
}

Replacement parse_replacement(const std::string& name) {
  if (name == "distinct") return Replacement::Distinct;
  if (name == "with-replacement") return Replacement::WithReplacement;
  throw std::invalid_argument("unknown replacement mode: " + name);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct BlockTally {
  std::int64_t intransitive = 0, transitive = 0, ties = 0;
};

// stream ids for derivations; arbitrary fixed tags
constexpr std::uint64_t kTableTag = 1;
constexpr std::uint64_t kTournamentTag = 2;

std::uint64_t block_seed(const CounterRng& root, std::uint64_t tag, int n, int method_idx,
                         std::int64_t block) {
  CounterRng r = root.derive(tag)
                     .derive(static_cast<std::uint64_t>(n))
                     .derive(static_cast<std::uint64_t>(method_idx))
                     .derive(static_cast<std::uint64_t>(block));
  return r();
}

}  // namespace

TableReport run_intransitive_table(const TableSpec& spec, bool parallel) {
  const auto t0 = Clock::now();
  if (spec.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  TableReport report;
  report.spec = spec;
  const CounterRng root(spec.seed);

  for (int n : spec.n_list) {
    // warm the shared table once so parallel blocks only read it
    if (std::find(spec.methods.begin(), spec.methods.end(), SampleMethod::ExactDp) !=
        spec.methods.end())
      shared_count_table(n);
    for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
      const SampleMethod method = spec.methods[mi];
      const std::int64_t blocks = (spec.trials + kTrialBlock - 1) / kTrialBlock;
      std::vector<BlockTally> tally(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(dynamic) if (parallel)
      for (std::int64_t b = 0; b < blocks; ++b) {
        const std::int64_t lo = b * kTrialBlock;
        const std::int64_t hi = std::min(spec.trials, lo + kTrialBlock);
        SamplerConfig config;
        config.n = n;
        config.method = method;
        config.seed = block_seed(root, kTableTag, n, static_cast<int>(mi), b);
        config.mcmc_burn_in = spec.mcmc_burn_in;
        config.mcmc_thinning = spec.mcmc_thinning;
        auto sampler = make_sampler(config);
        BlockTally local;
        for (std::int64_t t = lo; t < hi; ++t) {
          TripleKind kind;
          if (spec.replacement == Replacement::Distinct) {
            const auto triple = sample_triple(*sampler);
            kind = classify_triple(triple[0], triple[1], triple[2]);
          } else {
            const ProperDie a = sampler->draw();
            const ProperDie b2 = sampler->draw();
            const ProperDie c = sampler->draw();
            kind = classify_triple(a, b2, c);
          }
          switch (kind) {
            case TripleKind::Intransitive: ++local.intransitive; break;
            case TripleKind::Transitive: ++local.transitive; break;
            case TripleKind::HasTie: ++local.ties; break;
          }
        }
        tally[static_cast<std::size_t>(b)] = local;
      }

      TableRow row;
      row.n = n;
      row.method = method;
      row.trials = spec.trials;
      for (const auto& t : tally) {
        row.intransitive += t.intransitive;
        row.transitive += t.transitive;
        row.tie_trials += t.ties;
      }
      const double denom =
          spec.tie_handling == TieHandling::CountAsNeither
              ? static_cast<double>(row.trials)
              : static_cast<double>(row.trials - row.tie_trials);
      if (denom > 0) {
        row.fraction_intransitive = static_cast<double>(row.intransitive) / denom;
        row.fraction_transitive = static_cast<double>(row.transitive) / denom;
        row.fraction_tie = spec.tie_handling == TieHandling::CountAsNeither
                               ? static_cast<double>(row.tie_trials) / denom
                               : 0.0;
        row.standard_error =
            std::sqrt(row.fraction_intransitive * (1 - row.fraction_intransitive) / denom);
      }
      row.tie_trial_rate = static_cast<double>(row.tie_trials) / static_cast<double>(row.trials);
      report.rows.push_back(row);
    }
  }
  report.wall_ms = ms_since(t0);
  return report;
}

TournamentExperimentReport run_tournament_experiment(const TournamentExperimentSpec& spec,
                                                     bool parallel) {
  const auto t0 = Clock::now();
  if (spec.k < 2 || spec.k > 6)
    throw resource_limit_error("tournament experiment: k must be in [2, 6]");
  if (spec.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  const std::size_t orientations = std::size_t{1} << Tournament::pair_count(spec.k);
  const CounterRng root(spec.seed);
  if (spec.method == SampleMethod::ExactDp) shared_count_table(spec.n);

  const std::int64_t blocks = (spec.trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<std::vector<std::int64_t>> tallies(
      static_cast<std::size_t>(blocks), std::vector<std::int64_t>(orientations, 0));
  std::vector<std::int64_t> tie_blocks(static_cast<std::size_t>(blocks), 0);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t lo = b * kTrialBlock;
    const std::int64_t hi = std::min(spec.trials, lo + kTrialBlock);
    SamplerConfig config;
    config.n = spec.n;
    config.method = spec.method;
    config.seed = block_seed(root, kTournamentTag, spec.n, 0, b);
    config.mcmc_burn_in = spec.mcmc_burn_in;
    config.mcmc_thinning = spec.mcmc_thinning;
    auto sampler = make_sampler(config);
    auto& local = tallies[static_cast<std::size_t>(b)];
    for (std::int64_t t = lo; t < hi; ++t) {
      const auto dice = sample_distinct(*sampler, spec.k);
      const Tournament g = outcome_graph(dice);
      if (g.has_tie())
        ++tie_blocks[static_cast<std::size_t>(b)];
      else
        ++local[g.orientation_bits()];
    }
  }

  TournamentExperimentReport report;
  report.spec = spec;
  report.orientation_counts.assign(orientations, 0);
  for (std::int64_t b = 0; b < blocks; ++b) {
    report.tie_trials += tie_blocks[static_cast<std::size_t>(b)];
    for (std::size_t o = 0; o < orientations; ++o)
      report.orientation_counts[o] += tallies[static_cast<std::size_t>(b)][o];
  }
  report.tie_trial_rate =
      static_cast<double>(report.tie_trials) / static_cast<double>(spec.trials);
  const std::int64_t kept = spec.trials - report.tie_trials;
  report.dof = static_cast<int>(orientations) - 1;
  if (kept > 0) {
    const double expected = static_cast<double>(kept) / static_cast<double>(orientations);
    double chi2 = 0;
    for (std::int64_t c : report.orientation_counts) {
      const double d = static_cast<double>(c) - expected;
      chi2 += d * d / expected;
    }
    report.chi_square = chi2;
  }
  report.wall_ms = ms_since(t0);
  return report;
}

}  // namespace dicelab
