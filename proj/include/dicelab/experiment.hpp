// experiment.hpp -- seeded Monte Carlo experiments: the intransitive-triple
// table over a list of side counts, and k-dice tournament equidistribution
// runs. Work is split into fixed trial blocks with derived random streams,
// so results do not depend on the thread count.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dicelab/sampling.hpp"
#include "dicelab/tournament.hpp"

namespace dicelab {

enum class TieHandling { CountAsNeither, Exclude };
enum class Replacement { Distinct, WithReplacement };
const char* to_string(TieHandling t);
const char* to_string(Replacement r);
TieHandling parse_tie_handling(const std::string& name);
Replacement parse_replacement(const std::string& name);

inline constexpr std::int64_t kTrialBlock = 1024;

struct TableSpec {
  std::vector<int> n_list;
  std::int64_t trials = 10'000;
  std::vector<SampleMethod> methods{SampleMethod::ExactDp, SampleMethod::SwapMcmc};
  std::uint64_t seed = 0;
  TieHandling tie_handling = TieHandling::CountAsNeither;
  Replacement replacement = Replacement::Distinct;
  std::int64_t mcmc_burn_in = -1;
  std::int64_t mcmc_thinning = -1;
};

struct TableRow {
  int n = 0;
  SampleMethod method = SampleMethod::ExactDp;
  std::int64_t trials = 0;
  std::int64_t intransitive = 0;
  std::int64_t transitive = 0;
  std::int64_t tie_trials = 0;
  // fractions under the chosen tie handling; they sum to one
  double fraction_intransitive = 0;
  double fraction_transitive = 0;
  double fraction_tie = 0;
  double tie_trial_rate = 0;  // tie_trials / trials, regardless of handling
  double standard_error = 0;  // binomial, for the intransitive fraction
};

struct TableReport {
  TableSpec spec;
  std::vector<TableRow> rows;
  double wall_ms = 0;
};

// One row per (n, method): classifies `trials` random triples.
TableReport run_intransitive_table(const TableSpec& spec, bool parallel = true);

struct TournamentExperimentSpec {
  int n = 0;
  int k = 3;
  std::int64_t trials = 10'000;
  SampleMethod method = SampleMethod::ExactDp;
  std::uint64_t seed = 0;
  std::int64_t mcmc_burn_in = -1;
  std::int64_t mcmc_thinning = -1;
};

struct TournamentExperimentReport {
  TournamentExperimentSpec spec;
  std::vector<std::int64_t> orientation_counts;  // one cell per 2^C(k,2) orientation
  std::int64_t tie_trials = 0;
  double tie_trial_rate = 0;
  double chi_square = 0;  // against uniform over all orientations, tie-free trials
  int dof = 0;
  double wall_ms = 0;
};

// Samples k distinct dice per trial, discards trials with tie edges from the
// orientation tally (reporting the rate) and tests the tally against the
// uniform law over all 2^C(k,2) orientations.
TournamentExperimentReport run_tournament_experiment(const TournamentExperimentSpec& spec,
                                                     bool parallel = true);

}  // namespace dicelab
