#include "dicelab/report.hpp"

#include <iomanip>
#include <sstream>

#include "dicelab/version.hpp"

namespace dicelab {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

Json spec_json(const TableSpec& spec) {
  Json methods = Json::array();
  for (auto m : spec.methods) methods.push_back(to_string(m));
  return Json{{"n_list", spec.n_list},
              {"trials", spec.trials},
              {"methods", methods},
              {"seed", spec.seed},
              {"tie_handling", to_string(spec.tie_handling)},
              {"replacement", to_string(spec.replacement)},
              {"mcmc_burn_in", spec.mcmc_burn_in},
              {"mcmc_thinning", spec.mcmc_thinning}};
}

Json spec_json(const TournamentExperimentSpec& spec) {
  return Json{{"n", spec.n},
              {"k", spec.k},
              {"trials", spec.trials},
              {"method", to_string(spec.method)},
              {"seed", spec.seed},
              {"mcmc_burn_in", spec.mcmc_burn_in},
              {"mcmc_thinning", spec.mcmc_thinning}};
}

}  // namespace

Json report_header(const std::string& report_kind) {
  return Json{{"schema_version", kSchemaVersion},
              {"tool", "dice-lab"},
              {"library_version", kVersion},
              {"report", report_kind}};
}

Json to_json(const TableReport& report) {
  Json j = report_header("intransitive_table");
  j["spec"] = spec_json(report.spec);
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"n", r.n},
                        {"method", to_string(r.method)},
                        {"trials", r.trials},
                        {"intransitive", r.intransitive},
                        {"transitive", r.transitive},
                        {"tie_trials", r.tie_trials},
                        {"fraction_intransitive", r.fraction_intransitive},
                        {"fraction_transitive", r.fraction_transitive},
                        {"fraction_tie", r.fraction_tie},
                        {"tie_trial_rate", r.tie_trial_rate},
                        {"standard_error", r.standard_error}});
  }
  j["rows"] = rows;
  j["wall_clock_ms"] = report.wall_ms;
  return j;
}

std::string to_csv(const TableReport& report) {
  std::ostringstream os;
  os << "n,method,trials,intransitive,transitive,tie_trials,fraction_intransitive,"
        "fraction_transitive,fraction_tie,tie_trial_rate,standard_error\n";
  for (const auto& r : report.rows)
    os << r.n << ',' << to_string(r.method) << ',' << r.trials << ',' << r.intransitive << ','
       << r.transitive << ',' << r.tie_trials << ',' << fmt(r.fraction_intransitive) << ','
       << fmt(r.fraction_transitive) << ',' << fmt(r.fraction_tie) << ','
       << fmt(r.tie_trial_rate) << ',' << fmt(r.standard_error) << '\n';
  return os.str();
}

Json to_json(const TournamentExperimentReport& report) {
  Json j = report_header("tournament_experiment");
  j["spec"] = spec_json(report.spec);
  j["orientation_counts"] = report.orientation_counts;
  j["tie_trials"] = report.tie_trials;
  j["tie_trial_rate"] = report.tie_trial_rate;
  j["chi_square"] = report.chi_square;
  j["dof"] = report.dof;
  j["wall_clock_ms"] = report.wall_ms;
  return j;
}

std::string to_csv(const TournamentExperimentReport& report) {
  std::ostringstream os;
  os << "orientation,edges,count\n";
  for (std::size_t o = 0; o < report.orientation_counts.size(); ++o)
    os << o << ',' << '"' << orientation_to_string(static_cast<std::uint32_t>(o), report.spec.k)
       << '"' << ',' << report.orientation_counts[o] << '\n';
  os << "tie_trials,," << report.tie_trials << '\n';
  os << "chi_square,," << fmt(report.chi_square) << '\n';
  os << "dof,," << report.dof << '\n';
  return os.str();
}

Json to_json(const TripleCensus& census) {
  Json j = report_header("triple_census");
  j["n"] = census.n;
  j["total"] = census.total.str();
  j["intransitive"] = census.intransitive.str();
  j["transitive"] = census.transitive.str();
  j["with_ties"] = census.with_ties.str();
  return j;
}

Json to_json(const OneStepCensus& census) {
  Json j = report_header("onestep_census");
  j["n"] = census.n;
  j["comparable_triples"] = census.comparable;
  j["intransitive_triples"] = census.intransitive;
  const double n3 = static_cast<double>(census.n) * census.n * census.n;
  j["comparable_per_n3"] = static_cast<double>(census.comparable) / n3;
  j["intransitive_fraction"] =
      census.comparable ? static_cast<double>(census.intransitive) /
                              static_cast<double>(census.comparable)
                        : 0.0;
  return j;
}

Json to_json(const Lemma1Report& report) {
  Json j = report_header("lemma1_verification");
  j["n"] = report.n;
  j["pairs_checked"] = report.pairs_checked;
  j["strict_pairs"] = report.strict_pairs;
  Json v = Json::array();
  for (const auto& [w, l] : report.violations)
    v.push_back(Json{{"winner", format_onestep(w)}, {"loser", format_onestep(l)}});
  j["violations"] = v;
  return j;
}

Json to_json(const CaseReport& report) {
  Json j = report_header("case_verification");
  j["case"] = report.case_index;
  j["n"] = report.n;
  j["instantiations"] = report.instantiations;
  j["matching"] = report.matching;
  j["mismatching"] = report.mismatching;
  Json ex = Json::array();
  for (const auto& xyz : report.mismatch_examples)
    ex.push_back(Json{{"X", xyz[0]}, {"Y", xyz[1]}, {"Z", xyz[2]}});
  j["mismatch_examples"] = ex;
  return j;
}

Json to_json(const CoverageReport& report) {
  Json j = report_header("coverage_check");
  j["n"] = report.n;
  j["comparable_triples"] = report.comparable;
  j["covered_distinct_triples"] = report.covered_distinct;
  Json unc = Json::array();
  for (const auto& t : report.uncovered)
    unc.push_back(Json::array(
        {format_onestep(t[0]), format_onestep(t[1]), format_onestep(t[2])}));
  j["uncovered"] = unc;
  return j;
}

Json orientation_census_json(const std::map<std::uint32_t, std::int64_t>& census, int k) {
  Json j = report_header("orientation_census");
  j["k"] = k;
  Json classes = Json::array();
  std::int64_t total = 0;
  for (const auto& [canon, count] : census) {
    classes.push_back(Json{{"canonical", canon},
                           {"representative", orientation_to_string(canon, k)},
                           {"count", count}});
    total += count;
  }
  j["classes"] = classes;
  j["class_count"] = census.size();
  j["total_orientations"] = total;
  return j;
}

namespace {
void strip_volatile(Json& j) {
  if (j.is_object()) {
    j.erase("wall_clock_ms");
    for (auto& [k, v] : j.items()) strip_volatile(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_volatile(v);
  }
}
}  // namespace

std::string stable_dump(Json j, int indent) {
  strip_volatile(j);
  return j.dump(indent);
}

}  // namespace dicelab
