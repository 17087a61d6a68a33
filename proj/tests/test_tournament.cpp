#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dicelab/rng.hpp"
#include "dicelab/tournament.hpp"

using namespace dicelab;

namespace {

Tournament from_bits(std::uint32_t bits, int k) {
  Tournament t(k);
  int e = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++e) t.set_edge(i, j, bits >> e & 1u ? 1 : -1);
  return t;
}

// test-local relabeling, written independently of the library's
std::uint32_t apply_perm(std::uint32_t bits, int k, const std::vector<int>& perm) {
  const Tournament t = from_bits(bits, k);
  Tournament out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) out.set_edge(i, j, t.edge(perm[static_cast<std::size_t>(i)],
                                                              perm[static_cast<std::size_t>(j)]));
  return out.orientation_bits();
}

// independent census: group orientations into orbits by explicit expansion
std::map<std::uint32_t, std::int64_t> orbit_census(int k) {
  const std::uint32_t total = 1u << Tournament::pair_count(k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::uint32_t, std::int64_t> census;  // orbit min -> size
  std::vector<bool> seen(total, false);
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    if (seen[bits]) continue;
    std::set<std::uint32_t> orbit;
    for (const auto& p : perms) orbit.insert(apply_perm(bits, k, p));
    for (std::uint32_t o : orbit) seen[o] = true;
    census[*orbit.begin()] = static_cast<std::int64_t>(orbit.size());
  }
  return census;
}

}  // namespace

TEST_CASE("outcome graph") {
  const std::vector<ProperDie> trio{ProperDie({1, 1, 4, 4}), ProperDie({1, 3, 3, 3}),
                                    ProperDie({2, 2, 2, 4})};
  const Tournament t = outcome_graph(trio);
  CHECK(t.edge(0, 1) == 1);  // A beats B
  CHECK(t.edge(1, 2) == 1);  // B beats C
  CHECK(t.edge(2, 0) == 1);  // C beats A
  CHECK_FALSE(t.has_tie());
  CHECK(classify3(t) == TripleShape::Intransitive);
  CHECK(t.out_degrees() == std::vector<int>{1, 1, 1});

  // equal dice tie
  const Tournament t2 = outcome_graph({ProperDie({1, 1, 4, 4}), ProperDie({1, 1, 4, 4})});
  CHECK(t2.has_tie());
  CHECK(t2.edge(0, 1) == 0);

  // k = 2 matches relation directly
  const Tournament t3 = outcome_graph({ProperDie({2, 2, 2, 4}), ProperDie({1, 1, 4, 4})});
  CHECK(t3.edge(0, 1) == 1);

  CHECK_THROWS_AS(outcome_graph({ProperDie({1, 2}), ProperDie({1, 2, 3})}),
                  std::invalid_argument);
}

TEST_CASE("classify3 census over all 8 orientations") {
  int intrans = 0, trans = 0;
  for (std::uint32_t bits = 0; bits < 8; ++bits)
    (classify3(from_bits(bits, 3)) == TripleShape::Intransitive ? intrans : trans)++;
  CHECK(intrans == 2);
  CHECK(trans == 6);

  Tournament tie(3);
  tie.set_edge(0, 1, 0);
  tie.set_edge(0, 2, 1);
  tie.set_edge(1, 2, 1);
  CHECK_THROWS_AS(classify3(tie), std::invalid_argument);
}

TEST_CASE("classify4 census over all 64 orientations") {
  std::map<Config4, int> counts;
  for (std::uint32_t bits = 0; bits < 64; ++bits) ++counts[classify4(from_bits(bits, 4))];
  CHECK(counts[Config4::Score3210] == 24);
  CHECK(counts[Config4::Score3111] == 8);
  CHECK(counts[Config4::Score2220] == 8);
  CHECK(counts[Config4::Score2211] == 24);

  // one dominant vertex plus a cycle below it
  Tournament t(4);
  t.set_edge(0, 1, 1);
  t.set_edge(0, 2, 1);
  t.set_edge(0, 3, 1);
  t.set_edge(1, 2, 1);
  t.set_edge(2, 3, 1);
  t.set_edge(3, 1, 1);
  CHECK(classify4(t) == Config4::Score3111);
}

TEST_CASE("orientation census matches the independent orbit census") {
  for (int k : {3, 4, 5}) {
    const auto fast = orientation_census(k);
    const auto slow = orbit_census(k);
    REQUIRE(fast.size() == slow.size());
    std::int64_t sum = 0;
    for (const auto& [canon, count] : fast) {
      REQUIRE(slow.count(canon) == 1);
      CHECK(slow.at(canon) == count);
      sum += count;
    }
    CHECK(sum == (1ll << Tournament::pair_count(k)));
  }
}

TEST_CASE("census class counts for small k") {
  const auto c3 = orientation_census(3);
  std::multiset<std::int64_t> counts3;
  for (const auto& [canon, count] : c3) counts3.insert(count);
  CHECK(counts3 == std::multiset<std::int64_t>{2, 6});

  const auto c4 = orientation_census(4);
  std::multiset<std::int64_t> counts4;
  for (const auto& [canon, count] : c4) counts4.insert(count);
  CHECK(counts4 == std::multiset<std::int64_t>{8, 8, 24, 24});

  CHECK(orientation_census(5).size() == 12);
  CHECK_THROWS_AS(orientation_census(7), resource_limit_error);
}

TEST_CASE("relabelings land in the same class") {
  CounterRng rng(31);
  const int k = 5;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 1000; ++t) {
    const std::uint32_t bits =
        static_cast<std::uint32_t>(uniform_below(rng, 1u << Tournament::pair_count(k)));
    for (int i = k - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    CHECK(canonical_orientation(bits, k) == canonical_orientation(apply_perm(bits, k, perm), k));
  }
}

TEST_CASE("canonical form is idempotent") {
  CounterRng rng(32);
  for (int t = 0; t < 200; ++t) {
    const std::uint32_t bits = static_cast<std::uint32_t>(uniform_below(rng, 1u << 10));
    const std::uint32_t canon = canonical_orientation(bits, 5);
    CHECK(canonical_orientation(canon, 5) == canon);
    CHECK(canon <= bits);
  }
}
