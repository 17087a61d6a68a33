// tournament.hpp -- outcome graphs of k mutually compared dice, score-based
// classification for 3 and 4 vertices, and the exact orientation census by
// isomorphism class.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dicelab/die.hpp"
#include "dicelab/errors.hpp"

namespace dicelab {

// Orientation (with possible tie edges) of the complete graph on k vertices.
// Pairs {i < j} are indexed lexicographically.
class Tournament {
 public:
  explicit Tournament(int k);

  int k() const { return k_; }
  static std::size_t pair_count(int k) {
    return static_cast<std::size_t>(k) * (k - 1) / 2;
  }

  // dir: +1 for i -> j, -1 for j -> i, 0 for a tie. i != j, any order.
  void set_edge(int i, int j, int dir);
  int edge(int i, int j) const;  // +1 iff i beats j

  bool has_tie() const;
  std::vector<int> out_degrees() const;  // tie edges contribute to neither side

  // Bit e set iff the lower-indexed endpoint of pair e wins. Tie-free only.
  std::uint32_t orientation_bits() const;

 private:
  std::size_t index(int i, int j) const;
  int k_;
  std::vector<std::int8_t> edges_;
};

// Pairwise relations of the given dice. All dice must share one side count.
Tournament outcome_graph(const std::vector<ProperDie>& dice);

enum class TripleShape { Transitive, Intransitive };

// Tie-free 3-tournaments only: Intransitive iff the out-degrees are (1,1,1).
TripleShape classify3(const Tournament& t);

// Score sequences of tie-free 4-tournaments. The four values exhaust all 64
// orientations with labeled counts 24, 8, 8, 24.
enum class Config4 { Score3210, Score3111, Score2220, Score2211 };
const char* to_string(Config4 c);
Config4 classify4(const Tournament& t);

// Lexicographically smallest orientation bitmask over all k! relabelings.
std::uint32_t canonical_orientation(std::uint32_t bits, int k);

// Partitions all 2^C(k,2) tie-free orientations into isomorphism classes;
// maps canonical form -> labeled orientation count. k <= 6.
std::map<std::uint32_t, std::int64_t> orientation_census(int k, bool parallel = true);

// Renders an orientation as "0>1 2>0 1>2" for reports.
std::string orientation_to_string(std::uint32_t bits, int k);

}  // namespace dicelab
