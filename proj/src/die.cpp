#include "dicelab/die.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

namespace dicelab {

namespace {
std::atomic<int> g_max_sides{10'000};
}

int max_sides() { return g_max_sides.load(); }

void set_max_sides(int n) {
  if (n < 1) throw std::invalid_argument("max_sides must be >= 1");
  // 2n^2 must fit in int64 for comparison tallies; 10^9 sides is far beyond
  // anything enumerable anyway.
  if (n > 1'000'000'000) throw std::invalid_argument("max_sides too large");
  g_max_sides.store(n);
}

Die::Die(std::vector<Face> faces) : faces_(std::move(faces)) {
  if (faces_.empty()) throw std::invalid_argument("die needs at least one face");
  if (static_cast<int>(faces_.size()) > max_sides())
    throw std::invalid_argument("die exceeds the side-count cap");
  std::sort(faces_.begin(), faces_.end());
  if (faces_.front() < 1) throw std::invalid_argument("faces must be >= 1");
}

ProperDie::ProperDie(std::vector<Face> faces) : Die(std::move(faces)) {
  if (!validate_proper(*this)) throw std::invalid_argument("die is not proper");
}

ProperDie::ProperDie(Die d) : Die(std::move(d)) {
  if (!validate_proper(*this)) throw std::invalid_argument("die is not proper");
}

ProperDie standard_die(int n) {
  if (n < 1) throw std::invalid_argument("standard_die: n must be >= 1");
  std::vector<Face> f(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = i + 1;
  return ProperDie(std::move(f));
}

bool validate_proper(const Die& d) {
  const int n = d.sides();
  long long sum = 0;
  for (Face f : d.faces()) {
    if (f < 1 || f > n) return false;
    sum += f;
  }
  return sum == static_cast<long long>(n) * (n + 1) / 2;
}

namespace {
void check_same_sides(const Die& a, const Die& b) {
  if (a.sides() != b.sides())
    throw std::invalid_argument("compared dice must have the same side count");
}
}  // namespace

Comparison compare(const Die& a, const Die& b) {
  check_same_sides(a, b);
  const auto& fa = a.faces();
  const auto& fb = b.faces();
  const std::size_t n = fa.size();
  std::uint64_t wins_a = 0, ties = 0;
  std::size_t lt = 0, le = 0;  // #faces of b strictly below / at most fa[i]
  for (std::size_t i = 0; i < n; ++i) {
    const Face v = fa[i];
    while (lt < n && fb[lt] < v) ++lt;
    while (le < n && fb[le] <= v) ++le;
    wins_a += lt;
    ties += le - lt;
  }
  const std::uint64_t total = static_cast<std::uint64_t>(n) * n;
  return Comparison{wins_a, total - wins_a - ties, ties};
}

Comparison compare_naive(const Die& a, const Die& b) {
  check_same_sides(a, b);
  Comparison c;
  for (Face x : a.faces())
    for (Face y : b.faces()) {
      if (x > y)
        ++c.wins_a;
      else if (y > x)
        ++c.wins_b;
      else
        ++c.ties;
    }
  return c;
}

Relation relation_of(const Comparison& c) {
  if (c.wins_a > c.wins_b) return Relation::AWins;
  if (c.wins_b > c.wins_a) return Relation::BWins;
  return Relation::Tie;
}

Relation relation(const Die& a, const Die& b) { return relation_of(compare(a, b)); }

std::string format_die(const Die& d) {
  std::ostringstream os;
  os << '(';
  const auto& f = d.faces();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ',';
    os << f[i];
  }
  os << ')';
  return os.str();
}

Die parse_die(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t\r\n");
  if (begin == std::string::npos || text[begin] != '(' || text[end] != ')')
    throw std::invalid_argument("die text must look like (1,2,3)");
  std::vector<Face> faces;
  std::string inner = text.substr(begin + 1, end - begin - 1);
  std::istringstream is(inner);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad face value: " + tok);
    faces.push_back(v);
  }
  return Die(std::move(faces));
}

}  // namespace dicelab
