// onestep.hpp -- one-step dice s(a,b): the standard die with face a raised by
// one and face b lowered by one. Covers the beat-pattern classification, the
// table of 64 parametric triples with its verifier, exact triple censuses,
// and the coverage cross-check.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dicelab/die.hpp"
#include "dicelab/errors.hpp"
#include "dicelab/relation_graph.hpp"

namespace dicelab {

// Valid when 1 <= up <= n-1 and down in [2, n] \ {up, up+1}. There are
// exactly (n-2)^2 valid pairs for each n >= 3.
struct OneStep {
  int n = 0;
  int up = 0;    // face whose value increases by one
  int down = 0;  // face whose value decreases by one
  friend bool operator==(const OneStep&, const OneStep&) = default;
};

bool onestep_valid(int n, int up, int down) noexcept;
// Empty string when valid, otherwise the violated constraint.
std::string onestep_violation(int n, int up, int down);
// Throws std::invalid_argument naming the violated constraint.
OneStep make_onestep(int n, int up, int down);

ProperDie realize(const OneStep& s);
std::string format_onestep(const OneStep& s);  // "s(8,5)"

// All (n-2)^2 one-step dice, ordered by (up, down). Throws for n < 3 (the
// universe is empty below three sides).
std::vector<OneStep> enumerate_onestep(int n);

// The four index patterns certifying a strict win between one-step dice:
//   1: winner.down == loser.up          s(x,y) > s(y,z)
//   2: loser.down == winner.up + 2      s(x,y) > s(z,x+2)
//   3: winner.up == loser.up + 1        s(x+1,y) > s(x,z)
//   4: winner.down == loser.down + 1    s(x,y+1) > s(z,y)
// Returned as a bitmask with bit r set for pattern r (bits 1..4).
unsigned beat_reasons(const OneStep& winner, const OneStep& loser) noexcept;
inline bool has_reason(unsigned mask, int r) { return (mask >> r) & 1u; }

// Same, but checks the precondition that winner strictly beats loser; throws
// std::invalid_argument if not.
unsigned classify_beat(const OneStep& winner, const OneStep& loser);

// Realizations and pairwise relations of the whole n-sided one-step universe.
class OneStepUniverse {
 public:
  explicit OneStepUniverse(int n, bool parallel = true);

  int n() const { return n_; }
  std::size_t size() const { return dice_.size(); }
  const std::vector<OneStep>& dice() const { return dice_; }
  const OneStep& die(std::size_t i) const { return dice_[i]; }
  int index_of(int up, int down) const;  // -1 when (up, down) is not valid
  int rel(std::size_t i, std::size_t j) const { return graph_.rel(i, j); }
  const RelationGraph& graph() const { return graph_; }

 private:
  int n_;
  std::vector<OneStep> dice_;
  std::vector<int> index_;  // (up-1)*n + (down-1) -> dense index
  RelationGraph graph_;
};

struct Lemma1Report {
  int n = 0;
  std::uint64_t pairs_checked = 0;  // ordered pairs of distinct dice
  std::uint64_t strict_pairs = 0;
  std::vector<std::pair<OneStep, OneStep>> violations;  // strict wins with no pattern
};

// Checks that every strict win between one-step dice matches at least one of
// the four patterns. violations is expected to stay empty.
Lemma1Report verify_lemma1(int n, bool parallel = true);
Lemma1Report verify_lemma1(const OneStepUniverse& universe, bool parallel = true);

// ---- the 64-case table ----

enum class CaseVar : std::uint8_t { X = 0, Y = 1, Z = 2 };

struct CaseTerm {
  CaseVar var;
  int offset;  // 0..4
};

struct CaseDieSpec {
  CaseTerm up, down;
};

struct ParametricCase {
  int index = 0;                      // 1..64
  std::array<CaseDieSpec, 3> dice;    // descriptors for A, B, C
  bool intransitive = false;
  std::array<int, 3> reasons{};       // pattern codes for A:B, B:C, C:A
  std::array<int, 3> order{};         // word letters as 0=A 1=B 2=C
  int weight_thirds = 3;              // 1 for the two self-similar cases

  // expected winner (0/1/2) of each of the comparisons (A,B), (B,C), (C,A),
  // derived from the kind and the order word
  std::array<int, 3> expected_winners() const;
};

// The shipped table. Parsed once from the embedded text and cached.
const std::vector<ParametricCase>& case_table();
// Raw text and its pinned CRC-32 (verified on first load).
std::string_view case_table_text();
std::uint32_t case_table_crc();
// Parser, exposed so tests can feed corrupted tables through the verifier.
std::vector<ParametricCase> parse_case_table(std::string_view text);
std::uint32_t crc32(std::string_view data);

// Builds the three dice at (X, Y, Z); nothing when any die is invalid or two
// dice coincide.
std::optional<std::array<OneStep, 3>> instantiate_case(const ParametricCase& c, int X, int Y,
                                                       int Z, int n);

struct CaseReport {
  int case_index = 0;
  int n = 0;
  std::int64_t instantiations = 0;
  std::int64_t matching = 0;
  std::int64_t mismatching = 0;
  std::vector<std::array<int, 3>> mismatch_examples;  // first few (X, Y, Z)
};

// Sweeps (X, Y, Z) over [1, n]^3 and checks every valid instantiation against
// the declared directions, reasons and kind. Mismatches are boundary or
// coincidence effects; their count is expected to grow like n^2 against n^3
// matches.
CaseReport verify_case(const ParametricCase& c, const OneStepUniverse& universe,
                       int max_examples = 8);

struct OneStepCensus {
  int n = 0;
  std::uint64_t comparable = 0;    // unordered triples, all three relations strict
  std::uint64_t intransitive = 0;  // of those, cyclic
};

inline constexpr std::uint64_t kDefaultOneStepPairBudget = 6'000'000;

// Exact census by brute force over the (n-2)^2 dice; the pairwise relation
// matrix dominates the work.
OneStepCensus census_onestep_triples(int n,
                                     std::uint64_t pair_budget = kDefaultOneStepPairBudget,
                                     bool parallel = true);
// Serial reference doing the cubic triple sweep directly.
OneStepCensus census_onestep_triples_direct(int n);

struct CoverageReport {
  int n = 0;
  std::uint64_t comparable = 0;
  std::uint64_t covered_distinct = 0;  // distinct triples produced by the 64 cases
  std::vector<std::array<OneStep, 3>> uncovered;  // comparable triples hit by no case
};

// Confirms that every comparable one-step triple is an instantiation of one
// of the 64 cases. Exhaustive, so n is capped (default 16).
CoverageReport coverage_check(int n, int max_n = 16);

}  // namespace dicelab
