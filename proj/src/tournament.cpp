#include "dicelab/tournament.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dicelab {

Tournament::Tournament(int k) : k_(k) {
  if (k < 2) throw std::invalid_argument("Tournament: k must be >= 2");
  edges_.assign(pair_count(k), 0);
}

std::size_t Tournament::index(int i, int j) const {
  // i < j required by callers
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) -
         static_cast<std::size_t>(i) * (i + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

void Tournament::set_edge(int i, int j, int dir) {
  if (i == j || i < 0 || j < 0 || i >= k_ || j >= k_)
    throw std::invalid_argument("Tournament::set_edge: bad vertex pair");
  if (i > j) {
    std::swap(i, j);
    dir = -dir;
  }
  edges_[index(i, j)] = static_cast<std::int8_t>(dir);
}

int Tournament::edge(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= k_ || j >= k_)
    throw std::invalid_argument("Tournament::edge: bad vertex pair");
  return i < j ? edges_[index(i, j)] : -edges_[index(j, i)];
}

bool Tournament::has_tie() const {
  return std::any_of(edges_.begin(), edges_.end(), [](std::int8_t e) { return e == 0; });
}

std::vector<int> Tournament::out_degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(k_), 0);
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) {
      const int e = edges_[index(i, j)];
      if (e > 0)
        ++deg[static_cast<std::size_t>(i)];
      else if (e < 0)
        ++deg[static_cast<std::size_t>(j)];
    }
  return deg;
}

std::uint32_t Tournament::orientation_bits() const {
  if (has_tie()) throw std::invalid_argument("orientation_bits: tournament has tie edges");
  std::uint32_t bits = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e] > 0) bits |= 1u << e;
  return bits;
}

Tournament outcome_graph(const std::vector<ProperDie>& dice) {
  const int k = static_cast<int>(dice.size());
  if (k < 2) throw std::invalid_argument("outcome_graph: need at least two dice");
  const int n = dice[0].sides();
  for (const auto& d : dice)
    if (d.sides() != n)
      throw std::invalid_argument("outcome_graph: dice must share one side count");
  Tournament t(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      switch (relation(dice[static_cast<std::size_t>(i)], dice[static_cast<std::size_t>(j)])) {
        case Relation::AWins: t.set_edge(i, j, 1); break;
        case Relation::BWins: t.set_edge(i, j, -1); break;
        case Relation::Tie: t.set_edge(i, j, 0); break;
      }
    }
  return t;
}

TripleShape classify3(const Tournament& t) {
  if (t.k() != 3) throw std::invalid_argument("classify3: k must be 3");
  if (t.has_tie()) throw std::invalid_argument("classify3: tie edges present");
  const auto deg = t.out_degrees();
  return (deg[0] == 1 && deg[1] == 1 && deg[2] == 1) ? TripleShape::Intransitive
                                                     : TripleShape::Transitive;
}

const char* to_string(Config4 c) {
  switch (c) {
    case Config4::Score3210: return "3210";
    case Config4::Score3111: return "3111";
    case Config4::Score2220: return "2220";
    case Config4::Score2211: return "2211";
  }
  return "?";
}

Config4 classify4(const Tournament& t) {
  if (t.k() != 4) throw std::invalid_argument("classify4: k must be 4");
  if (t.has_tie()) throw std::invalid_argument("classify4: tie edges present");
  auto deg = t.out_degrees();
  std::sort(deg.begin(), deg.end(), std::greater<>());
  if (deg == std::vector<int>{3, 2, 1, 0}) return Config4::Score3210;
  if (deg == std::vector<int>{3, 1, 1, 1}) return Config4::Score3111;
  if (deg == std::vector<int>{2, 2, 2, 0}) return Config4::Score2220;
  if (deg == std::vector<int>{2, 2, 1, 1}) return Config4::Score2211;
  throw std::logic_error("classify4: impossible score sequence");
}

namespace {

struct PairTable {
  // pair index per (i, j), i < j, for one k
  std::array<std::array<int, 6>, 6> at{};
  explicit PairTable(int k) {
    int e = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) at[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e++;
  }
};

std::uint32_t relabel(std::uint32_t bits, int k, const int* perm, const PairTable& pt) {
  // edge between new labels (i, j) takes the direction between perm[i], perm[j]
  std::uint32_t out = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int a = perm[i], b = perm[j];
      bool a_wins;
      if (a < b)
        a_wins = bits >> pt.at[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] & 1u;
      else
        a_wins = !(bits >> pt.at[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] & 1u);
      if (a_wins) out |= 1u << pt.at[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  return out;
}

void check_census_k(int k) {
  if (k < 2) throw std::invalid_argument("orientation census: k must be >= 2");
  if (k > 6)
    throw resource_limit_error("orientation census: k > 6 (2^" +
                               std::to_string(Tournament::pair_count(k)) +
                               " orientations) is over budget");
}

}  // namespace

std::uint32_t canonical_orientation(std::uint32_t bits, int k) {
  check_census_k(k);
  const PairTable pt(k);
  std::array<int, 6> perm{};
  std::iota(perm.begin(), perm.begin() + k, 0);
  std::uint32_t best = bits;
  do {
    best = std::min(best, relabel(bits, k, perm.data(), pt));
  } while (std::next_permutation(perm.begin(), perm.begin() + k));
  return best;
}

std::map<std::uint32_t, std::int64_t> orientation_census(int k, bool parallel) {
  check_census_k(k);
  const std::uint32_t count = 1u << Tournament::pair_count(k);
  std::vector<std::uint32_t> canon(count);
  const std::int64_t ci = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t bits = 0; bits < ci; ++bits)
    canon[static_cast<std::size_t>(bits)] =
        canonical_orientation(static_cast<std::uint32_t>(bits), k);
  std::map<std::uint32_t, std::int64_t> census;
  for (std::uint32_t c : canon) ++census[c];
  return census;
}

std::string orientation_to_string(std::uint32_t bits, int k) {
  std::ostringstream os;
  int e = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++e) {
      if (e) os << ' ';
      if (bits >> e & 1u)
        os << i << '>' << j;
      else
        os << j << '>' << i;
    }
  return os.str();
}

}  // namespace dicelab
