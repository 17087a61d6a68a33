#include "dicelab/relation_graph.hpp"

#include <bit>

namespace dicelab {

std::uint64_t RelationGraph::strict_pairs() const {
  std::uint64_t bits = 0;
  for (std::uint64_t w : out_) bits += static_cast<std::uint64_t>(std::popcount(w));
  return bits;  // each unordered strict pair sets exactly one out bit
}

std::uint64_t RelationGraph::tie_pairs() const {
  return m_ * (m_ - 1) / 2 - strict_pairs();
}

std::uint64_t RelationGraph::out_degree(std::size_t i) const {
  std::uint64_t d = 0;
  const std::uint64_t* row = out_row(i);
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::uint64_t>(std::popcount(row[w]));
  return d;
}

RelationGraph::TriangleCounts RelationGraph::count_strict_triangles(bool parallel) const {
  std::uint64_t comparable = 0, cyclic = 0;
  const std::int64_t mi = static_cast<std::int64_t>(m_);
#pragma omp parallel if (parallel)
  {
    std::vector<std::uint64_t> strict_i(words_);
#pragma omp for schedule(dynamic, 4) reduction(+ : comparable, cyclic)
    for (std::int64_t ii = 0; ii < mi; ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      strict_row(i, strict_i.data());
      // only j > i
      for (std::size_t w = (i + 1) >> 6; w < words_; ++w) {
        std::uint64_t jbits = strict_i[w];
        if (w == (i >> 6)) {
          const unsigned b = static_cast<unsigned>(i & 63);
          jbits &= (b == 63) ? 0ull : ~((2ull << b) - 1);
        }
        while (jbits) {
          const std::size_t j = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(jbits));
          jbits &= jbits - 1;
          const std::uint64_t* oj = out_row(j);
          const std::uint64_t* nj = in_row(j);
          // comparable: k > j adjacent (strictly) to both i and j
          // cyclic: oriented k completing the loop through (i, j)
          const bool i_beats_j = bit(out_, i, j);
          const std::uint64_t* cyc_a = i_beats_j ? oj : out_row(i);
          const std::uint64_t* cyc_b = i_beats_j ? in_row(i) : nj;
          const std::size_t wj = (j + 1) >> 6;
          const unsigned bj = static_cast<unsigned>(j & 63);
          const std::uint64_t jmask = (bj == 63) ? 0ull : ~((2ull << bj) - 1);
          for (std::size_t t = wj; t < words_; ++t) {
            std::uint64_t keep = (t == (j >> 6)) ? jmask : ~0ull;
            const std::uint64_t both = strict_i[t] & (oj[t] | nj[t]) & keep;
            comparable += static_cast<std::uint64_t>(std::popcount(both));
            const std::uint64_t loop = cyc_a[t] & cyc_b[t] & keep;
            cyclic += static_cast<std::uint64_t>(std::popcount(loop));
          }
        }
      }
    }
  }
  return TriangleCounts{comparable, cyclic};
}

RelationGraph::TriangleCounts RelationGraph::count_strict_triangles_direct() const {
  TriangleCounts c;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j) {
      const int rij = rel(i, j);
      if (rij == 0) continue;
      for (std::size_t k = j + 1; k < m_; ++k) {
        const int rik = rel(i, k), rjk = rel(j, k);
        if (rik == 0 || rjk == 0) continue;
        ++c.comparable;
        // cyclic iff every vertex wins exactly one of its two edges
        const int wins_i = (rij > 0) + (rik > 0);
        const int wins_j = (rij < 0) + (rjk > 0);
        if (wins_i == 1 && wins_j == 1) ++c.cyclic;
      }
    }
  return c;
}

}  // namespace dicelab
