#include <doctest.h>

#include "dicelab/die.hpp"
#include "dicelab/rng.hpp"
#include "dicelab/sampling.hpp"

using namespace dicelab;

TEST_CASE("standard die") {
  CHECK(standard_die(4).faces() == std::vector<Face>{1, 2, 3, 4});
  CHECK(standard_die(1).faces() == std::vector<Face>{1});
  const ProperDie ten = standard_die(10);
  long long sum = 0;
  for (Face f : ten.faces()) sum += f;
  CHECK(sum == 55);
  CHECK_THROWS_AS(standard_die(0), std::invalid_argument);
}

TEST_CASE("die construction sorts and validates") {
  CHECK(Die({4, 1, 4, 1}).faces() == std::vector<Face>{1, 1, 4, 4});
  CHECK_THROWS_AS(Die({}), std::invalid_argument);
  CHECK_THROWS_AS(Die({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ProperDie({1, 1, 1, 4}), std::invalid_argument);
}

TEST_CASE("validate_proper") {
  CHECK(validate_proper(Die({1, 1, 4, 4})));
  CHECK(validate_proper(Die({2, 2, 2, 4})));
  CHECK_FALSE(validate_proper(Die({1, 1, 1, 4})));   // sum 7 != 10
  CHECK_FALSE(validate_proper(Die({1, 1, 5, 3})));   // face above n
}

TEST_CASE("comparison examples") {
  const Die a({1, 2, 4, 4, 4, 6});
  const Die b({2, 2, 3, 3, 5, 6});
  CHECK(compare(a, b) == Comparison{17, 16, 3});
  CHECK(compare_naive(a, b) == Comparison{17, 16, 3});
  CHECK(relation(a, b) == Relation::AWins);

  CHECK(compare(Die({1, 1, 4, 4}), Die({2, 2, 2, 4})) == Comparison{6, 8, 2});
  CHECK(relation(Die({2, 2, 2, 4}), Die({1, 1, 4, 4})) == Relation::AWins);

  const Die d({2, 2, 3, 3, 5, 6});
  const Comparison self = compare(d, d);
  CHECK(self.wins_a == self.wins_b);
  CHECK(self.ties >= 6);  // the diagonal always ties

  CHECK(relation(Die({1, 1, 4, 4}), Die({1, 3, 3, 3})) == Relation::AWins);
  CHECK(relation(d, d) == Relation::Tie);
  CHECK_THROWS_AS(compare(Die({1, 2}), Die({1, 2, 3})), std::invalid_argument);
}

namespace {
// random nondecreasing tuple with faces in [1, n]; not necessarily proper
Die random_die(int n, CounterRng& rng) {
  std::vector<Face> f(static_cast<std::size_t>(n));
  for (auto& v : f) v = static_cast<Face>(uniform_below(rng, static_cast<std::uint64_t>(n)) + 1);
  return Die(std::move(f));
}
}  // namespace

TEST_CASE("merge and naive comparison agree on random pairs") {
  CounterRng rng(42);
  for (int n : {5, 10, 50, 200}) {
    const int pairs = n <= 50 ? 10'000 : 2'500;  // naive is quadratic
    for (int t = 0; t < pairs; ++t) {
      const Die a = random_die(n, rng);
      const Die b = random_die(n, rng);
      const Comparison m = compare(a, b);
      CHECK(m == compare_naive(a, b));
      // mirror symmetry and the n^2 tally
      const Comparison r = compare(b, a);
      CHECK(m.wins_a == r.wins_b);
      CHECK(m.ties == r.ties);
      CHECK(m.wins_a + m.wins_b + m.ties ==
            static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
    }
  }
}

TEST_CASE("mirror symmetry on proper dice") {
  SamplerConfig config;
  config.n = 50;
  config.method = SampleMethod::SwapMcmc;
  config.seed = 7;
  auto sampler = make_sampler(config);
  for (int t = 0; t < 200; ++t) {
    const ProperDie a = sampler->draw();
    const ProperDie b = sampler->draw();
    const Comparison m = compare(a, b);
    const Comparison r = compare(b, a);
    CHECK(m.wins_a == r.wins_b);
    CHECK(m.wins_b == r.wins_a);
    CHECK(m.ties == r.ties);
  }
}

TEST_CASE("canonical text form") {
  CHECK(format_die(Die({1, 1, 4, 4})) == "(1,1,4,4)");
  CHECK(parse_die("(1,1,4,4)") == Die({1, 1, 4, 4}));
  CHECK(parse_die(" (2,2,3,3) ") == Die({2, 2, 3, 3}));
  CHECK_THROWS_AS(parse_die("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_die("(1,x)"), std::invalid_argument);

  CounterRng rng(1);
  for (int t = 0; t < 200; ++t) {
    const Die d = random_die(12, rng);
    CHECK(parse_die(format_die(d)) == d);
  }
}
