// report.hpp -- machine-readable renderings of results. JSON objects carry a
// schema_version; CSV renderings hold the same numeric content. Reports are
// deterministic for a fixed spec and seed except for wall_clock_ms, which
// stable_dump() strips for byte-level comparison.
#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "dicelab/enumeration.hpp"
#include "dicelab/experiment.hpp"
#include "dicelab/onestep.hpp"

namespace dicelab {

using Json = nlohmann::json;

Json report_header(const std::string& report_kind);

Json to_json(const TableReport& report);
std::string to_csv(const TableReport& report);

Json to_json(const TournamentExperimentReport& report);
std::string to_csv(const TournamentExperimentReport& report);

Json to_json(const TripleCensus& census);
Json to_json(const OneStepCensus& census);
Json to_json(const Lemma1Report& report);
Json to_json(const CaseReport& report);
Json to_json(const CoverageReport& report);
Json orientation_census_json(const std::map<std::uint32_t, std::int64_t>& census, int k);

// Serialization with volatile fields (wall_clock_ms) removed; two runs with
// one RunSpec compare byte for byte on this form.
std::string stable_dump(Json j, int indent = 2);

}  // namespace dicelab
