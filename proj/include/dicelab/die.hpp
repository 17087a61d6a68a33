// die.hpp -- dice as nondecreasing integer face tuples, and the beats/ties
// relation counted over all n^2 face pairs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dicelab {

using Face = int;

// Side-count cap. Keeps n^2 pair tallies far inside 64-bit range no matter
// what the caller asks for.
int max_sides();
void set_max_sides(int n);

// A die: at least one face, all faces >= 1, stored sorted ascending.
// Constructors sort their input, so equality is equality of multisets.
class Die {
 public:
  explicit Die(std::vector<Face> faces);
  int sides() const { return static_cast<int>(faces_.size()); }
  const std::vector<Face>& faces() const { return faces_; }
  Face operator[](int i) const { return faces_[static_cast<std::size_t>(i)]; }
  friend bool operator==(const Die&, const Die&) = default;
  friend auto operator<=>(const Die& a, const Die& b) { return a.faces_ <=> b.faces_; }

 private:
  std::vector<Face> faces_;
};

// A proper die: faces in [1, n] and face sum n(n+1)/2. Construction throws
// std::invalid_argument if the input is not proper.
class ProperDie : public Die {
 public:
  explicit ProperDie(std::vector<Face> faces);
  explicit ProperDie(Die d);
};

// Win/loss/tie tallies over all n^2 ordered face pairs of two n-sided dice.
struct Comparison {
  std::uint64_t wins_a = 0;
  std::uint64_t wins_b = 0;
  std::uint64_t ties = 0;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

enum class Relation { AWins, BWins, Tie };

// (1, 2, ..., n). Throws std::invalid_argument for n < 1 or n > max_sides().
ProperDie standard_die(int n);

// True iff d has faces in [1, n] summing to n(n+1)/2. Total function.
bool validate_proper(const Die& d);

// Production comparison: one sorted-merge counting pass, O(n).
Comparison compare(const Die& a, const Die& b);
// Reference comparison: direct O(n^2) tabulation. Kept for cross-checking.
Comparison compare_naive(const Die& a, const Die& b);

// Relation is derived from compare() alone; sign of wins_a - wins_b.
Relation relation_of(const Comparison& c);
Relation relation(const Die& a, const Die& b);

// Canonical text form "(1,1,4,4)".
std::string format_die(const Die& d);
Die parse_die(const std::string& text);

}  // namespace dicelab
