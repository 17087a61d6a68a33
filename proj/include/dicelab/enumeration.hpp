// enumeration.hpp -- exact counts of proper dice, lexicographic enumeration,
// and the exhaustive triple census used as ground truth elsewhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "dicelab/die.hpp"
#include "dicelab/errors.hpp"

namespace dicelab {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumerationLimit = 100'000'000;  // dice
inline constexpr std::uint64_t kDefaultPairBudget = 600'000'000;        // unordered pairs

// Memoized count of partitions of `sum` into exactly `parts` parts, each part
// in [1, max_face]. cell(n, n(n+1)/2, n) is the number of proper n-sided dice.
// Built once per n; immutable and shareable afterwards.
class CountTable {
 public:
  explicit CountTable(int n);

  int sides() const { return n_; }
  const BigInt& total() const { return total_; }
  const BigInt& cell(int parts, int sum, int max_face) const;

 private:
  const BigInt& compute(int parts, int sum, int max_face);
  static std::uint64_t key(int parts, int sum, int max_face);

  int n_;
  std::unordered_map<std::uint64_t, BigInt> memo_;
  BigInt total_;
  BigInt zero_;
};

// Shared per-n cache; tables are built on first use and reused.
std::shared_ptr<const CountTable> shared_count_table(int n);

// Number of proper n-sided dice (dice counted as multisets).
BigInt count_proper(int n);

// Streams every proper n-sided die in lexicographic face order. The callback
// receives the face buffer of each die in turn; it must not hold the
// reference past the call.
template <class Fn>
void for_each_proper(int n, Fn&& fn) {
  std::vector<Face> faces(static_cast<std::size_t>(n));
  const long long target = static_cast<long long>(n) * (n + 1) / 2;
  // choose faces left to right, nondecreasing
  auto rec = [&](auto&& self, int pos, Face prev, long long rem) -> void {
    if (pos == n) {
      fn(const_cast<const std::vector<Face>&>(faces));
      return;
    }
    const long long left = n - pos - 1;  // faces after this one
    for (Face v = prev; v <= n; ++v) {
      const long long r = rem - v;
      if (r < left * v) break;      // later faces must each be >= v
      if (r > left * n) continue;   // later faces can be at most n each
      faces[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v, r);
    }
  };
  if (n >= 1) rec(rec, 0, 1, target);
}

// Materialized enumeration, guarded by `limit` (checked against Pr(n) before
// any allocation). Throws resource_limit_error naming Pr(n) when exceeded.
std::vector<ProperDie> enumerate_proper(int n, std::uint64_t limit = kDefaultEnumerationLimit);

enum class TripleKind { Intransitive, Transitive, HasTie };
const char* to_string(TripleKind k);

// HasTie if any pairwise relation ties; Intransitive if the strict wins form
// a loop; Transitive otherwise.
TripleKind classify_triple(const Die& a, const Die& b, const Die& c);

struct TripleCensus {
  int n = 0;
  BigInt total;         // C(Pr(n), 3)
  BigInt intransitive;
  BigInt transitive;
  BigInt with_ties;
};

// Exact classification of every unordered triple of distinct proper dice.
// Work is quadratic in Pr(n) (pairwise phase), so the pair budget gates n.
TripleCensus triple_census(int n, std::uint64_t pair_budget = kDefaultPairBudget,
                           bool parallel = true);

}  // namespace dicelab
