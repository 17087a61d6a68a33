// reproduce.hpp -- the reproduction suite: every library-level claim that is
// checkable by computation, run end to end with one pass/fail line per check.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dicelab::repro {

enum class Status { Pass, Fail, Deviation };

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  double seconds = 0;
};

struct Options {
  bool quick = false;          // reduced sizes, minutes -> seconds
  std::uint64_t seed = 20260809;
  bool parallel = true;
};

// Runs all checks, streaming one line per check to `log`.
//
// Status::Deviation marks a check whose stated target band is unattainable
// for a documented mathematical reason; the measured values must then match
// the pinned exact oracle, otherwise the check fails. Deviations are
// reported loudly but do not fail the suite.
std::vector<CheckResult> run_reproduction_suite(const Options& options, std::ostream& log);

bool suite_passed(const std::vector<CheckResult>& results);

}  // namespace dicelab::repro
