// relation_graph.hpp -- pairwise beat/tie structure over a fixed list of dice,
// stored as bit rows, plus strict-triangle counting.
//
// A "strict triangle" is an unordered triple whose three pairwise relations
// are all strict (no tie edge); "cyclic" means the three wins form a loop.
#pragma once

#include <cstdint>
#include <vector>

namespace dicelab {

class RelationGraph {
 public:
  RelationGraph() = default;

  // rel(i, j) must return +1 (i beats j), -1 (j beats i) or 0 (tie), and be
  // antisymmetric. Each row is computed independently, so rel is evaluated
  // for both (i, j) and (j, i).
  template <class RelFn>
  static RelationGraph build(std::size_t m, RelFn&& rel, bool parallel = true) {
    RelationGraph g;
    g.m_ = m;
    g.words_ = (m + 63) / 64;
    g.out_.assign(m * g.words_, 0);
    g.in_.assign(m * g.words_, 0);
    const std::int64_t mi = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::int64_t i = 0; i < mi; ++i) {
      std::uint64_t* out_row = g.out_.data() + static_cast<std::size_t>(i) * g.words_;
      std::uint64_t* in_row = g.in_.data() + static_cast<std::size_t>(i) * g.words_;
      for (std::size_t j = 0; j < m; ++j) {
        if (static_cast<std::size_t>(i) == j) continue;
        const int r = rel(static_cast<std::size_t>(i), j);
        if (r > 0)
          out_row[j >> 6] |= 1ull << (j & 63);
        else if (r < 0)
          in_row[j >> 6] |= 1ull << (j & 63);
      }
    }
    return g;
  }

  std::size_t size() const { return m_; }

  int rel(std::size_t i, std::size_t j) const {
    if (bit(out_, i, j)) return 1;
    if (bit(in_, i, j)) return -1;
    return 0;
  }

  std::uint64_t strict_pairs() const;  // unordered pairs with a strict winner
  std::uint64_t tie_pairs() const;
  std::uint64_t out_degree(std::size_t i) const;

  struct TriangleCounts {
    std::uint64_t comparable = 0;
    std::uint64_t cyclic = 0;
  };

  // Bit-row kernel: for every strict pair (i, j) intersect strict neighbor
  // rows above j. Work is strict_edges * m/64 words.
  TriangleCounts count_strict_triangles(bool parallel = true) const;

  // Direct O(m^3) sweep over index triples. Reference implementation.
  TriangleCounts count_strict_triangles_direct() const;

  // Visits each strict triangle once with i < j < k.
  template <class Fn>
  void for_each_strict_triangle(Fn&& fn) const {
    std::vector<std::uint64_t> strict_i(words_), common(words_);
    for (std::size_t i = 0; i < m_; ++i) {
      strict_row(i, strict_i.data());
      for (std::size_t j = i + 1; j < m_; ++j) {
        if (!(strict_i[j >> 6] >> (j & 63) & 1)) continue;
        const std::uint64_t* oj = out_row(j);
        const std::uint64_t* nj = in_row(j);
        for (std::size_t w = 0; w < words_; ++w) common[w] = strict_i[w] & (oj[w] | nj[w]);
        mask_above(common.data(), j);
        for (std::size_t w = (j + 1) >> 6; w < words_; ++w) {
          std::uint64_t bits = common[w];
          while (bits) {
            const std::size_t k = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
            bits &= bits - 1;
            fn(i, j, k);
          }
        }
      }
    }
  }

 private:
  bool bit(const std::vector<std::uint64_t>& rows, std::size_t i, std::size_t j) const {
    return rows[i * words_ + (j >> 6)] >> (j & 63) & 1;
  }
  const std::uint64_t* out_row(std::size_t i) const { return out_.data() + i * words_; }
  const std::uint64_t* in_row(std::size_t i) const { return in_.data() + i * words_; }
  void strict_row(std::size_t i, std::uint64_t* dst) const {
    const std::uint64_t* o = out_row(i);
    const std::uint64_t* n = in_row(i);
    for (std::size_t w = 0; w < words_; ++w) dst[w] = o[w] | n[w];
  }
  // zero out bits <= j
  void mask_above(std::uint64_t* row, std::size_t j) const {
    const std::size_t w = j >> 6;
    for (std::size_t t = 0; t < w; ++t) row[t] = 0;
    const unsigned b = static_cast<unsigned>(j & 63);
    row[w] &= (b == 63) ? 0ull : ~((2ull << b) - 1);
  }

  std::size_t m_ = 0, words_ = 0;
  std::vector<std::uint64_t> out_, in_;
};

}  // namespace dicelab
