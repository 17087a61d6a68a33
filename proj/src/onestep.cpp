#include "dicelab/onestep.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace dicelab {

bool onestep_valid(int n, int up, int down) noexcept {
  return n >= 3 && up >= 1 && up <= n - 1 && down >= 2 && down <= n && down != up &&
         down != up + 1;
}

std::string onestep_violation(int n, int up, int down) {
  if (n < 3) return "n must be >= 3";
  if (up < 1 || up > n - 1) return "up face must be in [1, n-1]; face n cannot increase";
  if (down < 1 || down > n) return "down face must be in [1, n]";
  if (down == 1) return "face 1 cannot decrease";
  if (down == up) return "the raised face cannot also decrease";
  if (down == up + 1) return "lowering the face after the raised one undoes the step";
  return {};
}

OneStep make_onestep(int n, int up, int down) {
  const std::string why = onestep_violation(n, up, down);
  if (!why.empty()) {
    std::ostringstream os;
    os << "invalid one-step die s(" << up << "," << down << ") for n = " << n << ": " << why;
    throw std::invalid_argument(os.str());
  }
  return OneStep{n, up, down};
}

ProperDie realize(const OneStep& s) {
  std::vector<Face> faces(static_cast<std::size_t>(s.n));
  for (int i = 0; i < s.n; ++i) faces[static_cast<std::size_t>(i)] = i + 1;
  faces[static_cast<std::size_t>(s.up - 1)] += 1;
  faces[static_cast<std::size_t>(s.down - 1)] -= 1;
  return ProperDie(std::move(faces));  // ctor sorts
}

std::string format_onestep(const OneStep& s) {
  std::ostringstream os;
  os << "s(" << s.up << "," << s.down << ")";
  return os.str();
}

std::vector<OneStep> enumerate_onestep(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_onestep: no one-step dice exist for n < 3");
  std::vector<OneStep> out;
  out.reserve(static_cast<std::size_t>(n - 2) * static_cast<std::size_t>(n - 2));
  for (int a = 1; a <= n - 1; ++a)
    for (int b = 2; b <= n; ++b)
      if (b != a && b != a + 1) out.push_back(OneStep{n, a, b});
  return out;
}

unsigned beat_reasons(const OneStep& w, const OneStep& l) noexcept {
  unsigned mask = 0;
  if (w.down == l.up) mask |= 1u << 1;
  if (l.down == w.up + 2) mask |= 1u << 2;
  if (w.up == l.up + 1) mask |= 1u << 3;
  if (w.down == l.down + 1) mask |= 1u << 4;
  return mask;
}

unsigned classify_beat(const OneStep& w, const OneStep& l) {
  if (w.n != l.n) throw std::invalid_argument("classify_beat: mismatched n");
  if (relation(realize(w), realize(l)) != Relation::AWins)
    throw std::invalid_argument("classify_beat: " + format_onestep(w) +
                                " does not strictly beat " + format_onestep(l));
  return beat_reasons(w, l);
}

OneStepUniverse::OneStepUniverse(int n, bool parallel)
    : n_(n), dice_(enumerate_onestep(n)) {
  index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < dice_.size(); ++i)
    index_[static_cast<std::size_t>(dice_[i].up - 1) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(dice_[i].down - 1)] = static_cast<int>(i);
  // flatten realizations once, then the comparisons are plain merge passes
  std::vector<Face> flat(dice_.size() * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < dice_.size(); ++i) {
    const ProperDie d = realize(dice_[i]);
    std::copy(d.faces().begin(), d.faces().end(),
              flat.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(n)));
  }
  const std::size_t nn = static_cast<std::size_t>(n);
  graph_ = RelationGraph::build(
      dice_.size(),
      [&](std::size_t i, std::size_t j) {
        const Face* a = flat.data() + i * nn;
        const Face* b = flat.data() + j * nn;
        std::uint64_t wins_a = 0, ties = 0;
        std::size_t lt = 0, le = 0;
        for (std::size_t t = 0; t < nn; ++t) {
          const Face v = a[t];
          while (lt < nn && b[lt] < v) ++lt;
          while (le < nn && b[le] <= v) ++le;
          wins_a += lt;
          ties += le - lt;
        }
        const std::uint64_t wins_b = static_cast<std::uint64_t>(nn) * nn - wins_a - ties;
        return wins_a > wins_b ? 1 : wins_a < wins_b ? -1 : 0;
      },
      parallel);
}

int OneStepUniverse::index_of(int up, int down) const {
  if (up < 1 || up > n_ || down < 1 || down > n_) return -1;
  return index_[static_cast<std::size_t>(up - 1) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(down - 1)];
}

Lemma1Report verify_lemma1(int n, bool parallel) {
  return verify_lemma1(OneStepUniverse(n, parallel), parallel);
}

Lemma1Report verify_lemma1(const OneStepUniverse& u, bool parallel) {
  Lemma1Report report;
  report.n = u.n();
  const std::size_t m = u.size();
  report.pairs_checked = static_cast<std::uint64_t>(m) * (m - 1);
  std::uint64_t strict = 0;
  std::vector<std::pair<OneStep, OneStep>> violations;
  const std::int64_t mi = static_cast<std::int64_t>(m);
#pragma omp parallel if (parallel)
  {
    std::vector<std::pair<OneStep, OneStep>> local;
#pragma omp for schedule(static) reduction(+ : strict)
    for (std::int64_t i = 0; i < mi; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (static_cast<std::size_t>(i) == j) continue;
        if (u.rel(static_cast<std::size_t>(i), j) != 1) continue;
        ++strict;
        if (beat_reasons(u.die(static_cast<std::size_t>(i)), u.die(j)) == 0)
          local.emplace_back(u.die(static_cast<std::size_t>(i)), u.die(j));
      }
#pragma omp critical
    violations.insert(violations.end(), local.begin(), local.end());
  }
  std::sort(violations.begin(), violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.up, a.first.down, a.second.up, a.second.down) <
           std::tie(b.first.up, b.first.down, b.second.up, b.second.down);
  });
  report.strict_pairs = strict;
  report.violations = std::move(violations);
  return report;
}

std::optional<std::array<OneStep, 3>> instantiate_case(const ParametricCase& c, int X, int Y,
                                                       int Z, int n) {
  const int val[3] = {X, Y, Z};
  std::array<OneStep, 3> dice;
  for (int d = 0; d < 3; ++d) {
    const CaseDieSpec& spec = c.dice[static_cast<std::size_t>(d)];
    const int up = val[static_cast<int>(spec.up.var)] + spec.up.offset;
    const int down = val[static_cast<int>(spec.down.var)] + spec.down.offset;
    if (!onestep_valid(n, up, down)) return std::nullopt;
    dice[static_cast<std::size_t>(d)] = OneStep{n, up, down};
  }
  if (dice[0] == dice[1] || dice[0] == dice[2] || dice[1] == dice[2]) return std::nullopt;
  return dice;
}

namespace {

// checks the three declared relations and reasons for one instantiation
bool instantiation_matches(const ParametricCase& c, const std::array<OneStep, 3>& dice,
                           const std::array<int, 3>& winners, const OneStepUniverse& u) {
  constexpr int pair_first[3] = {0, 1, 2};
  constexpr int pair_second[3] = {1, 2, 0};
  for (int p = 0; p < 3; ++p) {
    const int win = winners[static_cast<std::size_t>(p)];
    const int lose = winners[static_cast<std::size_t>(p)] == pair_first[p] ? pair_second[p]
                                                                           : pair_first[p];
    const OneStep& w = dice[static_cast<std::size_t>(win)];
    const OneStep& l = dice[static_cast<std::size_t>(lose)];
    const int iw = u.index_of(w.up, w.down);
    const int il = u.index_of(l.up, l.down);
    if (u.rel(static_cast<std::size_t>(iw), static_cast<std::size_t>(il)) != 1) return false;
    if (!has_reason(beat_reasons(w, l), c.reasons[static_cast<std::size_t>(p)])) return false;
  }
  return true;
}

}  // namespace

CaseReport verify_case(const ParametricCase& c, const OneStepUniverse& u, int max_examples) {
  CaseReport report;
  report.case_index = c.index;
  report.n = u.n();
  const int n = u.n();
  const auto winners = c.expected_winners();
  std::int64_t inst = 0, match = 0, mism = 0;
#pragma omp parallel for schedule(static) reduction(+ : inst, match, mism)
  for (int X = 1; X <= n; ++X)
    for (int Y = 1; Y <= n; ++Y)
      for (int Z = 1; Z <= n; ++Z) {
        const auto dice = instantiate_case(c, X, Y, Z, n);
        if (!dice) continue;
        ++inst;
        if (instantiation_matches(c, *dice, winners, u))
          ++match;
        else
          ++mism;
      }
  report.instantiations = inst;
  report.matching = match;
  report.mismatching = mism;
  if (mism > 0 && max_examples > 0) {
    // cheap second pass, deterministic order
    for (int X = 1; X <= n && static_cast<int>(report.mismatch_examples.size()) < max_examples;
         ++X)
      for (int Y = 1; Y <= n && static_cast<int>(report.mismatch_examples.size()) < max_examples;
           ++Y)
        for (int Z = 1;
             Z <= n && static_cast<int>(report.mismatch_examples.size()) < max_examples; ++Z) {
          const auto dice = instantiate_case(c, X, Y, Z, n);
          if (dice && !instantiation_matches(c, *dice, winners, u))
            report.mismatch_examples.push_back({X, Y, Z});
        }
  }
  return report;
}

namespace {

void check_onestep_budget(int n, std::uint64_t pair_budget) {
  if (n < 3) throw std::invalid_argument("one-step census: n must be >= 3");
  const std::uint64_t m = static_cast<std::uint64_t>(n - 2) * static_cast<std::uint64_t>(n - 2);
  const std::uint64_t pairs = m * (m - 1) / 2;
  if (pairs > pair_budget) {
    std::ostringstream os;
    os << "one-step census: " << m << " dice give " << pairs << " pairs, over the budget of "
       << pair_budget;
    throw resource_limit_error(os.str());
  }
}

}  // namespace

OneStepCensus census_onestep_triples(int n, std::uint64_t pair_budget, bool parallel) {
  check_onestep_budget(n, pair_budget);
  const OneStepUniverse u(n, parallel);
  const auto tri = u.graph().count_strict_triangles(parallel);
  return OneStepCensus{n, tri.comparable, tri.cyclic};
}

OneStepCensus census_onestep_triples_direct(int n) {
  if (n < 3) throw std::invalid_argument("one-step census: n must be >= 3");
  const OneStepUniverse u(n, false);
  const auto tri = u.graph().count_strict_triangles_direct();
  return OneStepCensus{n, tri.comparable, tri.cyclic};
}

CoverageReport coverage_check(int n, int max_n) {
  if (n < 3) throw std::invalid_argument("coverage_check: n must be >= 3");
  if (n > max_n) {
    std::ostringstream os;
    os << "coverage_check: n = " << n << " over the exhaustive-sweep cap of " << max_n;
    throw resource_limit_error(os.str());
  }
  const OneStepUniverse u(n);
  CoverageReport report;
  report.n = n;

  auto key = [](std::size_t i, std::size_t j, std::size_t k) {
    return (static_cast<std::uint64_t>(i) << 42) | (static_cast<std::uint64_t>(j) << 21) |
           static_cast<std::uint64_t>(k);
  };
  std::unordered_set<std::uint64_t> comparable;
  u.graph().for_each_strict_triangle(
      [&](std::size_t i, std::size_t j, std::size_t k) { comparable.insert(key(i, j, k)); });
  report.comparable = comparable.size();

  std::unordered_set<std::uint64_t> covered;
  for (const ParametricCase& c : case_table())
    for (int X = 1; X <= n; ++X)
      for (int Y = 1; Y <= n; ++Y)
        for (int Z = 1; Z <= n; ++Z) {
          const auto dice = instantiate_case(c, X, Y, Z, n);
          if (!dice) continue;
          std::array<std::size_t, 3> id;
          for (int d = 0; d < 3; ++d)
            id[static_cast<std::size_t>(d)] = static_cast<std::size_t>(
                u.index_of((*dice)[static_cast<std::size_t>(d)].up,
                           (*dice)[static_cast<std::size_t>(d)].down));
          std::sort(id.begin(), id.end());
          covered.insert(key(id[0], id[1], id[2]));
        }
  report.covered_distinct = covered.size();

  std::vector<std::uint64_t> uncovered_keys;
  for (std::uint64_t k : comparable)
    if (!covered.contains(k)) uncovered_keys.push_back(k);
  std::sort(uncovered_keys.begin(), uncovered_keys.end());
  for (std::uint64_t packed : uncovered_keys) {
    const std::size_t i = packed >> 42;
    const std::size_t j = (packed >> 21) & ((1u << 21) - 1);
    const std::size_t k2 = packed & ((1u << 21) - 1);
    report.uncovered.push_back({u.die(i), u.die(j), u.die(k2)});
  }
  return report;
}

}  // namespace dicelab
