#include "dicelab/enumeration.hpp"

#include <mutex>
#include <sstream>

#include "dicelab/relation_graph.hpp"

namespace dicelab {

CountTable::CountTable(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CountTable: n must be >= 1");
  if (n > max_sides()) throw std::invalid_argument("CountTable: n exceeds side-count cap");
  memo_.reserve(1024);
  total_ = compute(n, n * (n + 1) / 2, n);
}

std::uint64_t CountTable::key(int parts, int sum, int max_face) {
  return (static_cast<std::uint64_t>(parts) << 44) |
         (static_cast<std::uint64_t>(sum) << 14) | static_cast<std::uint64_t>(max_face);
}

const BigInt& CountTable::cell(int parts, int sum, int max_face) const {
  static const BigInt one = 1;
  if (parts == 0) return sum == 0 ? one : zero_;
  if (sum < parts || sum > static_cast<long long>(parts) * max_face) return zero_;
  auto it = memo_.find(key(parts, sum, max_face));
  return it == memo_.end() ? zero_ : it->second;
}

const BigInt& CountTable::compute(int parts, int sum, int max_face) {
  static const BigInt one = 1;
  if (parts == 0) return sum == 0 ? one : zero_;
  if (sum < parts || sum > static_cast<long long>(parts) * max_face) return zero_;
  const std::uint64_t k = key(parts, sum, max_face);
  auto it = memo_.find(k);
  if (it != memo_.end()) return it->second;
  BigInt acc = 0;
  for (int v = 1; v <= max_face; ++v) acc += compute(parts - 1, sum - v, v);
  return memo_.emplace(k, std::move(acc)).first->second;
}

namespace {
std::mutex g_table_mutex;
std::unordered_map<int, std::shared_ptr<const CountTable>> g_tables;
}  // namespace

std::shared_ptr<const CountTable> shared_count_table(int n) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = g_tables.find(n);
  if (it != g_tables.end()) return it->second;
  auto table = std::make_shared<const CountTable>(n);
  g_tables.emplace(n, table);
  return table;
}

BigInt count_proper(int n) { return shared_count_table(n)->total(); }

std::vector<ProperDie> enumerate_proper(int n, std::uint64_t limit) {
  const BigInt total = count_proper(n);
  if (total > limit) {
    std::ostringstream os;
    os << "enumerate_proper: Pr(" << n << ") = " << total << " exceeds the limit of " << limit;
    throw resource_limit_error(os.str());
  }
  std::vector<ProperDie> out;
  out.reserve(static_cast<std::size_t>(total));
  for_each_proper(n, [&](const std::vector<Face>& faces) { out.emplace_back(faces); });
  return out;
}

const char* to_string(TripleKind k) {
  switch (k) {
    case TripleKind::Intransitive: return "intransitive";
    case TripleKind::Transitive: return "transitive";
    case TripleKind::HasTie: return "has_tie";
  }
  return "?";
}

TripleKind classify_triple(const Die& a, const Die& b, const Die& c) {
  const Relation ab = relation(a, b);
  const Relation bc = relation(b, c);
  const Relation ca = relation(c, a);
  if (ab == Relation::Tie || bc == Relation::Tie || ca == Relation::Tie)
    return TripleKind::HasTie;
  // around the loop a->b->c->a, a cycle means all three point the same way
  return (ab == bc && bc == ca) ? TripleKind::Intransitive : TripleKind::Transitive;
}

namespace {

// strict comparison of two sorted face spans, sign of wins_a - wins_b
int relation_sign(const Face* a, const Face* b, int n) {
  const std::size_t nn = static_cast<std::size_t>(n);
  std::uint64_t wins_a = 0, ties = 0;
  std::size_t lt = 0, le = 0;
  for (std::size_t i = 0; i < nn; ++i) {
    const Face v = a[i];
    while (lt < nn && b[lt] < v) ++lt;
    while (le < nn && b[le] <= v) ++le;
    wins_a += lt;
    ties += le - lt;
  }
  const std::uint64_t wins_b = static_cast<std::uint64_t>(nn) * nn - wins_a - ties;
  if (wins_a > wins_b) return 1;
  if (wins_b > wins_a) return -1;
  return 0;
}

BigInt choose3(const BigInt& m) {
  if (m < 3) return 0;
  return m * (m - 1) * (m - 2) / 6;
}

}  // namespace

TripleCensus triple_census(int n, std::uint64_t pair_budget, bool parallel) {
  const BigInt total_dice = count_proper(n);
  const BigInt pairs = total_dice * (total_dice - 1) / 2;
  if (pairs > pair_budget) {
    std::ostringstream os;
    os << "triple_census: Pr(" << n << ") = " << total_dice << " gives " << pairs
       << " pairs, over the budget of " << pair_budget;
    throw resource_limit_error(os.str());
  }

  // flatten faces so rows are cache friendly
  const std::size_t m = static_cast<std::size_t>(total_dice);
  std::vector<Face> flat;
  flat.reserve(m * static_cast<std::size_t>(n));
  for_each_proper(n, [&](const std::vector<Face>& f) {
    flat.insert(flat.end(), f.begin(), f.end());
  });

  const auto graph = RelationGraph::build(
      m,
      [&](std::size_t i, std::size_t j) {
        return relation_sign(flat.data() + i * static_cast<std::size_t>(n),
                             flat.data() + j * static_cast<std::size_t>(n), n);
      },
      parallel);
  const auto tri = graph.count_strict_triangles(parallel);

  TripleCensus census;
  census.n = n;
  census.total = choose3(total_dice);
  census.intransitive = tri.cyclic;
  census.transitive = tri.comparable - tri.cyclic;
  census.with_ties = census.total - tri.comparable;
  return census;
}

}  // namespace dicelab
