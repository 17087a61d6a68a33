// dice-lab: CLI harness over the dicelab library. Subcommands cover exact
// counts, enumeration, censuses, sampling, seeded experiments and the
// reproduction suite. Reports are text, CSV or JSON.
#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dicelab/die.hpp"
#include "dicelab/enumeration.hpp"
#include "dicelab/errors.hpp"
#include "dicelab/experiment.hpp"
#include "dicelab/onestep.hpp"
#include "dicelab/report.hpp"
#include "dicelab/reproduce.hpp"
#include "dicelab/sampling.hpp"
#include "dicelab/tournament.hpp"
#include "dicelab/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string format = "text";  // text | csv | json
  std::string out;
  int threads = 0;
  bool quick = false;
  std::string config_path;
};

void apply_config_file(CLI::App& app, GlobalOpts& g) {
  if (g.config_path.empty()) return;
  std::ifstream in(g.config_path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + g.config_path);
  nlohmann::json j;
  in >> j;
  // flags win over the config file
  if (j.contains("seed") && app.count("--seed") == 0) g.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("format") && app.count("--format") == 0) g.format = j["format"].get<std::string>();
  if (j.contains("out") && app.count("--out") == 0) g.out = j["out"].get<std::string>();
  if (j.contains("threads") && app.count("--threads") == 0) g.threads = j["threads"].get<int>();
  if (j.contains("quick") && app.count("--quick") == 0) g.quick = j["quick"].get<bool>();
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(g.out);
    if (!out) throw std::runtime_error("cannot write " + g.out);
    out << text;
  }
}

void emit_report(const GlobalOpts& g, const dicelab::Json& j, const std::string& csv = {}) {
  if (g.format == "csv" && !csv.empty())
    emit(g, csv);
  else
    emit(g, j.dump(2) + "\n");
}

std::string render_table_text(const dicelab::TableReport& report) {
  std::ostringstream os;
  os << "n      method  %intrans  %trans  %tie    stderr(pp)\n";
  for (const auto& r : report.rows) {
    os << std::left << std::setw(7) << r.n << std::setw(8) << to_string(r.method) << std::fixed
       << std::setprecision(2) << std::right << std::setw(8) << 100 * r.fraction_intransitive
       << std::setw(8) << 100 * r.fraction_transitive << std::setw(8) << 100 * r.fraction_tie
       << std::setw(12) << 100 * r.standard_error << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dicelab;
  CLI::App app{"dice-lab: exact censuses and Monte Carlo experiments on proper dice"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for all randomized subcommands");
  app.add_option("--format", g.format, "output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", g.out, "write output to this file instead of stdout");
  app.add_option("--threads", g.threads, "worker threads (0 = library default)");
  app.add_flag("--quick", g.quick, "reduced sizes where supported");
  app.add_option("--config", g.config_path, "JSON config mirroring the global flags");

  // count
  auto* cmd_count = app.add_subcommand("count", "print Pr(n), the number of proper dice");
  int count_n = 0;
  cmd_count->add_option("--n", count_n, "side count")->required();

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "list all proper n-sided dice");
  int enum_n = 0;
  std::uint64_t enum_limit = kDefaultEnumerationLimit;
  cmd_enum->add_option("--n", enum_n, "side count")->required();
  cmd_enum->add_option("--limit", enum_limit, "refuse to materialize more dice than this");

  // census
  auto* cmd_census = app.add_subcommand("census", "exact triple census over all proper dice");
  int census_n = 0;
  std::uint64_t census_budget = kDefaultPairBudget;
  cmd_census->add_option("--n", census_n, "side count")->required();
  cmd_census->add_option("--pair-budget", census_budget, "maximum pairwise comparisons");

  // sample
  auto* cmd_sample = app.add_subcommand("sample", "draw random proper dice");
  int sample_n = 0;
  std::int64_t sample_count = 1;
  std::string sample_method = "exact";
  cmd_sample->add_option("--n", sample_n, "side count")->required();
  cmd_sample->add_option("--count", sample_count, "number of dice to draw");
  cmd_sample->add_option("--method", sample_method, "exact or mcmc")
      ->check(CLI::IsMember({"exact", "mcmc"}));

  // experiment
  auto* cmd_exp = app.add_subcommand("experiment", "intransitive-triple Monte Carlo table");
  std::vector<int> exp_n_list;
  std::int64_t exp_trials = 10'000;
  std::string exp_methods = "both";
  std::string exp_ties = "count-as-neither";
  std::string exp_repl = "distinct";
  cmd_exp->add_option("--n", exp_n_list, "side counts (repeatable or comma separated)")
      ->required()
      ->delimiter(',');
  cmd_exp->add_option("--trials", exp_trials, "trials per (n, method) cell");
  cmd_exp->add_option("--method", exp_methods, "exact, mcmc or both")
      ->check(CLI::IsMember({"exact", "mcmc", "both"}));
  cmd_exp->add_option("--ties", exp_ties, "count-as-neither or exclude")
      ->check(CLI::IsMember({"count-as-neither", "exclude"}));
  cmd_exp->add_option("--replacement", exp_repl, "distinct or with-replacement")
      ->check(CLI::IsMember({"distinct", "with-replacement"}));

  // onestep group
  auto* cmd_onestep = app.add_subcommand("onestep", "one-step dice tooling");
  cmd_onestep->require_subcommand(1);
  auto* cmd_os_verify = cmd_onestep->add_subcommand(
      "verify", "check the beat patterns and the 64-case table against brute force");
  int osv_n = 15;
  int osv_case = 0;
  cmd_os_verify->add_option("--n", osv_n, "side count")->required();
  cmd_os_verify->add_option("--case", osv_case, "verify a single case index (1..64)");
  auto* cmd_os_census = cmd_onestep->add_subcommand("census", "exact one-step triple census");
  int osc_n = 0;
  std::uint64_t osc_budget = kDefaultOneStepPairBudget;
  cmd_os_census->add_option("--n", osc_n, "side count")->required();
  cmd_os_census->add_option("--pair-budget", osc_budget, "maximum pairwise comparisons");
  auto* cmd_os_cov = cmd_onestep->add_subcommand(
      "coverage", "confirm every comparable triple is an instantiation of some case");
  int oscov_n = 0;
  cmd_os_cov->add_option("--n", oscov_n, "side count")->required();

  // tournament group
  auto* cmd_tour = app.add_subcommand("tournament", "k-dice tournament graphs");
  cmd_tour->require_subcommand(1);
  auto* cmd_tc = cmd_tour->add_subcommand("census", "orientation census by isomorphism class");
  int tc_k = 4;
  cmd_tc->add_option("--k", tc_k, "vertex count (2..6)")->required();
  auto* cmd_te = cmd_tour->add_subcommand("experiment", "random k-dice orientation frequencies");
  int te_n = 0, te_k = 3;
  std::int64_t te_trials = 10'000;
  std::string te_method = "exact";
  cmd_te->add_option("--n", te_n, "side count")->required();
  cmd_te->add_option("--k", te_k, "dice per trial (2..6)");
  cmd_te->add_option("--trials", te_trials, "trials");
  cmd_te->add_option("--method", te_method, "exact or mcmc")
      ->check(CLI::IsMember({"exact", "mcmc"}));

  // reproduce
  auto* cmd_repro =
      app.add_subcommand("reproduce", "run the full reproduction suite, one line per check");

  // global flags are accepted after subcommands too
  for (CLI::App* sub : {cmd_count, cmd_enum, cmd_census, cmd_sample, cmd_exp, cmd_onestep,
                        cmd_os_verify, cmd_os_census, cmd_os_cov, cmd_tour, cmd_tc, cmd_te,
                        cmd_repro})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_config_file(app, g);
#ifdef _OPENMP
    if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

    if (*cmd_count) {
      emit(g, count_proper(count_n).str());
    } else if (*cmd_enum) {
      std::ostringstream os;
      if (g.format == "json") {
        Json dice = Json::array();
        for (const auto& d : enumerate_proper(enum_n, enum_limit))
          dice.push_back(d.faces());
        Json j = report_header("enumeration");
        j["n"] = enum_n;
        j["dice"] = dice;
        os << j.dump(2) << '\n';
      } else if (g.format == "csv") {
        for_each_proper(enum_n, [&](const std::vector<Face>& f) {
          for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
          os << '\n';
        });
      } else {
        const BigInt total = count_proper(enum_n);
        if (total > enum_limit)
          throw resource_limit_error("enumerate: Pr(" + std::to_string(enum_n) + ") = " +
                                     total.str() + " exceeds --limit");
        for_each_proper(enum_n,
                        [&](const std::vector<Face>& f) { os << format_die(Die(f)) << '\n'; });
      }
      emit(g, os.str());
    } else if (*cmd_census) {
      emit_report(g, to_json(triple_census(census_n, census_budget)));
    } else if (*cmd_sample) {
      SamplerConfig config;
      config.n = sample_n;
      config.method = parse_method(sample_method);
      config.seed = g.seed;
      auto sampler = make_sampler(config);
      std::ostringstream os;
      for (std::int64_t i = 0; i < sample_count; ++i) os << format_die(sampler->draw()) << '\n';
      emit(g, os.str());
    } else if (*cmd_exp) {
      TableSpec spec;
      spec.n_list = exp_n_list;
      spec.trials = exp_trials;
      spec.seed = g.seed;
      spec.tie_handling = parse_tie_handling(exp_ties);
      spec.replacement = parse_replacement(exp_repl);
      if (exp_methods == "exact")
        spec.methods = {SampleMethod::ExactDp};
      else if (exp_methods == "mcmc")
        spec.methods = {SampleMethod::SwapMcmc};
      const TableReport report = run_intransitive_table(spec);
      if (g.format == "text")
        emit(g, render_table_text(report));
      else
        emit_report(g, to_json(report), to_csv(report));
    } else if (*cmd_os_verify) {
      const OneStepUniverse universe(osv_n);
      Json j = report_header("onestep_verification");
      j["n"] = osv_n;
      j["lemma1"] = to_json(verify_lemma1(universe));
      Json cases = Json::array();
      bool all_ok = true;
      for (const auto& cs : case_table()) {
        if (osv_case != 0 && cs.index != osv_case) continue;
        const CaseReport r = verify_case(cs, universe);
        all_ok = all_ok && r.matching > r.mismatching && r.matching > 0;
        cases.push_back(to_json(r));
      }
      j["cases"] = cases;
      j["all_cases_dominant"] = all_ok;
      emit_report(g, j);
      if (!all_ok) return kExitCheckFailure;
    } else if (*cmd_os_census) {
      emit_report(g, to_json(census_onestep_triples(osc_n, osc_budget)));
    } else if (*cmd_os_cov) {
      const CoverageReport report = coverage_check(oscov_n);
      emit_report(g, to_json(report));
      if (!report.uncovered.empty()) return kExitCheckFailure;
    } else if (*cmd_tc) {
      emit_report(g, orientation_census_json(orientation_census(tc_k), tc_k));
    } else if (*cmd_te) {
      TournamentExperimentSpec spec;
      spec.n = te_n;
      spec.k = te_k;
      spec.trials = te_trials;
      spec.method = parse_method(te_method);
      spec.seed = g.seed;
      const auto report = run_tournament_experiment(spec);
      emit_report(g, to_json(report), to_csv(report));
    } else if (*cmd_repro) {
      repro::Options options;
      options.quick = g.quick;
      if (app.count("--seed")) options.seed = g.seed;
      std::ostringstream sink;
      const auto results = g.out.empty()
                               ? repro::run_reproduction_suite(options, std::cout)
                               : repro::run_reproduction_suite(options, sink);
      if (!g.out.empty()) emit(g, sink.str());
      if (!repro::suite_passed(results)) return kExitCheckFailure;
    }
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitOk;
}
