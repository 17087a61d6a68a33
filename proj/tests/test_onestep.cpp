#include <doctest.h>

#include <set>
#include <string>

#include "dicelab/onestep.hpp"

using namespace dicelab;

TEST_CASE("one-step construction and realization") {
  CHECK(realize(make_onestep(10, 8, 5)).faces() ==
        std::vector<Face>{1, 2, 3, 4, 4, 6, 7, 9, 9, 10});
  CHECK(realize(make_onestep(4, 3, 2)).faces() == std::vector<Face>{1, 1, 4, 4});
  CHECK(realize(make_onestep(3, 1, 3)).faces() == std::vector<Face>{2, 2, 2});

  // the constraint messages name what went wrong
  CHECK_THROWS_WITH_AS(make_onestep(5, 2, 3), doctest::Contains("undoes the step"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_onestep(5, 5, 2), doctest::Contains("face n cannot increase"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_onestep(5, 2, 1), doctest::Contains("face 1 cannot decrease"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_onestep(5, 2, 2), doctest::Contains("cannot also decrease"),
                       std::invalid_argument);
  CHECK_THROWS_AS(make_onestep(5, 2, 7), std::invalid_argument);
}

TEST_CASE("one-step universe sizes and reference lists") {
  CHECK_THROWS_AS(enumerate_onestep(2), std::invalid_argument);
  const auto three = enumerate_onestep(3);
  REQUIRE(three.size() == 1);
  CHECK(three[0] == OneStep{3, 1, 3});

  std::set<std::pair<int, int>> four;
  for (const auto& s : enumerate_onestep(4)) four.insert({s.up, s.down});
  CHECK(four == std::set<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}, {3, 2}});

  std::set<std::pair<int, int>> five;
  for (const auto& s : enumerate_onestep(5)) five.insert({s.up, s.down});
  CHECK(five == std::set<std::pair<int, int>>{
                    {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 2}, {3, 5}, {4, 2}, {4, 3}});
  CHECK(realize(make_onestep(5, 3, 5)).faces() == std::vector<Face>{1, 2, 4, 4, 4});
  CHECK(realize(make_onestep(5, 4, 3)).faces() == std::vector<Face>{1, 2, 2, 5, 5});

  for (int n = 3; n <= 40; ++n)
    CHECK(enumerate_onestep(n).size() ==
          static_cast<std::size_t>(n - 2) * static_cast<std::size_t>(n - 2));
}

TEST_CASE("one-step realizations are distinct proper dice") {
  const int n = 12;
  std::set<std::vector<Face>> seen;
  for (const auto& s : enumerate_onestep(n)) {
    const ProperDie d = realize(s);
    CHECK(validate_proper(d));
    CHECK(seen.insert(d.faces()).second);
  }
  CHECK(seen.size() == 100);
}

TEST_CASE("beat patterns") {
  // verified winners by direct tabulation
  CHECK(relation(realize(make_onestep(5, 3, 2)), realize(make_onestep(5, 2, 4))) ==
        Relation::AWins);
  CHECK(has_reason(classify_beat(make_onestep(5, 3, 2), make_onestep(5, 2, 4)), 3));
  CHECK(relation(realize(make_onestep(5, 4, 2)), realize(make_onestep(5, 2, 5))) ==
        Relation::AWins);
  CHECK(has_reason(classify_beat(make_onestep(5, 4, 2), make_onestep(5, 2, 5)), 1));
  // precondition: the loser does not beat the winner
  CHECK_THROWS_AS(classify_beat(make_onestep(5, 2, 4), make_onestep(5, 3, 2)),
                  std::invalid_argument);
}

TEST_CASE("lemma1 verification") {
  const Lemma1Report r3 = verify_lemma1(3);
  CHECK(r3.pairs_checked == 0);
  CHECK(r3.strict_pairs == 0);

  const Lemma1Report r4 = verify_lemma1(4);
  CHECK(r4.pairs_checked == 12);
  CHECK(r4.strict_pairs == 5);
  CHECK(r4.violations.empty());

  const Lemma1Report r10 = verify_lemma1(10);
  CHECK(r10.strict_pairs == 1181);
  CHECK(r10.violations.empty());

  CHECK(verify_lemma1(12).violations.empty());
}

TEST_CASE("universe relation matrix, serial equals parallel") {
  const OneStepUniverse par(10, true);
  const OneStepUniverse ser(10, false);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i)
    for (std::size_t j = 0; j < par.size(); ++j) CHECK(par.rel(i, j) == ser.rel(i, j));
  // antisymmetry
  for (std::size_t i = 0; i < par.size(); ++i)
    for (std::size_t j = i + 1; j < par.size(); ++j) CHECK(par.rel(i, j) == -par.rel(j, i));
}

TEST_CASE("case table integrity") {
  const auto& table = case_table();
  REQUIRE(table.size() == 64);
  CHECK(case_table_crc() == 0x68609793u);

  std::set<int> intrans;
  for (const auto& c : table)
    if (c.intransitive) intrans.insert(c.index);
  CHECK(intrans == std::set<int>{2, 13, 15, 18, 20, 21, 22, 23, 24, 28, 34, 43, 46, 48, 49, 54, 55});

  int total_thirds = 0, intrans_thirds = 0;
  for (const auto& c : table) {
    CHECK(c.weight_thirds == ((c.index == 13 || c.index == 54) ? 1 : 3));
    total_thirds += c.weight_thirds;
    if (c.intransitive) intrans_thirds += c.weight_thirds;
  }
  CHECK(total_thirds == 188);       // 62 2/3
  CHECK(intrans_thirds == 47);      // 15 2/3
  CHECK(intrans_thirds * 4 == total_thirds);

  // case 1: s(X, X+2), s(X, Z), s(X+1, Y), transitive, reasons (2)(3)(3), CBA
  const ParametricCase& c1 = table[0];
  CHECK(c1.dice[0].up.var == CaseVar::X);
  CHECK(c1.dice[0].down.var == CaseVar::X);
  CHECK(c1.dice[0].down.offset == 2);
  CHECK(c1.dice[1].down.var == CaseVar::Z);
  CHECK(c1.dice[2].up.offset == 1);
  CHECK_FALSE(c1.intransitive);
  CHECK(c1.reasons == std::array<int, 3>{2, 3, 3});
  CHECK(c1.order == std::array<int, 3>{2, 1, 0});

  // case 46 is intransitive with cycle A > C > B > A
  const ParametricCase& c46 = table[45];
  CHECK(c46.intransitive);
  CHECK(c46.order == std::array<int, 3>{0, 2, 1});
  const auto w46 = c46.expected_winners();  // winners of (A,B), (B,C), (C,A)
  CHECK(w46 == std::array<int, 3>{1, 2, 0});

  // case 54: s(X, Y+2), s(Y, Z+2), s(Z, X+2)
  const ParametricCase& c54 = table[53];
  CHECK(c54.dice[0].up.var == CaseVar::X);
  CHECK(c54.dice[0].down.var == CaseVar::Y);
  CHECK(c54.dice[1].down.var == CaseVar::Z);
  CHECK(c54.dice[2].down.var == CaseVar::X);
  CHECK(c54.dice[2].down.offset == 2);
}

TEST_CASE("case table parser rejects corrupted data") {
  std::string good(case_table_text());
  CHECK(parse_case_table(good).size() == 64);

  std::string bad_kind = good;
  bad_kind.replace(bad_kind.find(" T "), 3, " Q ");
  CHECK_THROWS_AS(parse_case_table(bad_kind), std::invalid_argument);

  std::string missing = good.substr(0, good.rfind("64 "));
  CHECK_THROWS_AS(parse_case_table(missing), std::invalid_argument);

  std::string bad_word = good;
  bad_word.replace(bad_word.find("CBA"), 3, "CBB");
  CHECK_THROWS_AS(parse_case_table(bad_word), std::invalid_argument);
}

TEST_CASE("a corrupted case entry is caught by the verifier, naming the case") {
  // flip case 1's declared order from CBA to ABC; directions then disagree
  std::string text(case_table_text());
  text.replace(text.find("T 2 3 3 CBA"), 11, "T 2 3 3 ABC");
  const auto table = parse_case_table(text);
  const OneStepUniverse universe(12);
  const CaseReport broken = verify_case(table[0], universe);
  CHECK(broken.case_index == 1);
  CHECK(broken.matching == 0);
  const CaseReport intact = verify_case(table[1], universe);
  CHECK(intact.matching > intact.mismatching);
}

TEST_CASE("instantiate_case") {
  const auto& table = case_table();
  const ParametricCase& c1 = table[0];
  const int n = 10;
  // interior instantiation is valid
  CHECK(instantiate_case(c1, 3, 6, 8, n).has_value());
  // X = n would need a face above n
  CHECK_FALSE(instantiate_case(c1, n, 6, 8, n).has_value());
  // Y or Z = 1 would need a face below 1
  CHECK_FALSE(instantiate_case(c1, 3, 1, 8, n).has_value());
  // Z = X + 2 collapses dice A and B
  CHECK_FALSE(instantiate_case(c1, 3, 6, 5, n).has_value());

  // the two self-similar cases reproduce the same unordered triple under the
  // cyclic substitution (X, Y, Z) -> (Y, Z, X)
  for (int idx : {13, 54}) {
    const ParametricCase& c = table[static_cast<std::size_t>(idx - 1)];
    const auto t1 = instantiate_case(c, 4, 7, 10, 15);
    const auto t2 = instantiate_case(c, 7, 10, 4, 15);
    REQUIRE(t1.has_value());
    REQUIRE(t2.has_value());
    auto key = [](const std::array<OneStep, 3>& t) {
      std::set<std::pair<int, int>> s;
      for (const auto& d : t) s.insert({d.up, d.down});
      return s;
    };
    CHECK(key(*t1) == key(*t2));
  }
}

TEST_CASE("verify_case at moderate n") {
  const OneStepUniverse universe(12);
  for (const auto& c : case_table()) {
    const CaseReport r = verify_case(c, universe);
    CHECK(r.matching > 0);
    CHECK(r.matching > r.mismatching);
    CHECK(r.instantiations == r.matching + r.mismatching);
  }
}

TEST_CASE("verify_case 38 realizes B>C, C>A, B>A") {
  const ParametricCase& c38 = case_table()[37];
  CHECK_FALSE(c38.intransitive);
  CHECK(c38.order == std::array<int, 3>{1, 2, 0});  // BCA
  CHECK(c38.reasons == std::array<int, 3>{3, 4, 2});
  const int n = 15;
  const OneStepUniverse universe(n);
  const auto t = instantiate_case(c38, 5, 9, 12, n);
  REQUIRE(t.has_value());
  const auto& [A, B, C] = *t;
  CHECK(relation(realize(B), realize(C)) == Relation::AWins);
  CHECK(relation(realize(C), realize(A)) == Relation::AWins);
  CHECK(relation(realize(B), realize(A)) == Relation::AWins);
  CHECK(has_reason(beat_reasons(B, A), 3));
  CHECK(has_reason(beat_reasons(B, C), 4));
  CHECK(has_reason(beat_reasons(C, A), 2));
}

TEST_CASE("mismatch share shrinks between n=20 and n=40") {
  const OneStepUniverse u20(20), u40(40);
  for (const auto& c : case_table()) {
    const CaseReport r20 = verify_case(c, u20, 0);
    const CaseReport r40 = verify_case(c, u40, 0);
    // m40 / 40^3 <= m20 / 20^3, as integers
    CHECK(r40.mismatching * 8000 <= r20.mismatching * 64000);
  }
}

TEST_CASE("one-step census: kernel equals the direct reference") {
  for (int n : {5, 6, 8, 10}) {
    const OneStepCensus fast = census_onestep_triples(n);
    const OneStepCensus slow = census_onestep_triples_direct(n);
    CHECK(fast.comparable == slow.comparable);
    CHECK(fast.intransitive == slow.intransitive);
  }
  const OneStepCensus c8 = census_onestep_triples(8);
  CHECK(c8.comparable == 2064);
  CHECK(c8.intransitive == 538);
}

TEST_CASE("one-step census budget") {
  CHECK_THROWS_AS(census_onestep_triples(61), resource_limit_error);
  CHECK_THROWS_AS(census_onestep_triples(2), std::invalid_argument);
}

TEST_CASE("coverage") {
  const CoverageReport r3 = coverage_check(3);  // vacuous: a single die
  CHECK(r3.comparable == 0);
  CHECK(r3.uncovered.empty());

  const CoverageReport r8 = coverage_check(8);
  CHECK(r8.comparable == 2064);
  CHECK(r8.uncovered.empty());

  CHECK_THROWS_AS(coverage_check(20), resource_limit_error);
}
