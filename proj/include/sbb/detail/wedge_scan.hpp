#pragma once

#include <cstdint>
#include <vector>

#include "sbb/exact.hpp"
#include "sbb/graph.hpp"

namespace sbb::detail {

// Flat per-end-vertex counters with a touched list, cleared in O(touched)
// between start vertices.
struct WedgeBucketTable {
  explicit WedgeBucketTable(std::size_t vertex_count)
      : symmetric(vertex_count, 0), asymmetric(vertex_count, 0) {}

  std::vector<std::uint32_t> symmetric;   // l per end vertex
  std::vector<std::uint32_t> asymmetric;  // m per end vertex
  std::vector<VertexId> touched;
};

struct StartTotals {
  Count balanced = 0;
  Count unbalanced = 0;
  Count wedge_pairs = 0;
  std::uint64_t wedges = 0;
  std::uint64_t pairs = 0;
};

// Buckets every wedge <u, v, w> with rank(v) < rank(u) and rank(w) < rank(u),
// then folds the tallies for each end vertex w into totals. Relies on the
// adjacency lists being sorted by ascending rank.
template <class OnPair>
void bucket_start_vertex(const SignedBipartiteGraph& g, VertexId u, WedgeBucketTable& table,
                         StartTotals& totals, OnPair&& on_pair) {
  const std::uint32_t ru = g.rank(u);
  const auto u_nbrs = g.neighbors(u);
  const auto u_signs = g.signs(u);
  for (std::size_t i = 0; i < u_nbrs.size(); ++i) {
    const VertexId v = u_nbrs[i];
    if (g.rank(v) >= ru) break;
    const Sign s_uv = u_signs[i];
    const auto v_nbrs = g.neighbors(v);
    const auto v_signs = g.signs(v);
    for (std::size_t j = 0; j < v_nbrs.size(); ++j) {
      const VertexId w = v_nbrs[j];
      if (g.rank(w) >= ru) break;
      if (table.symmetric[w] == 0 && table.asymmetric[w] == 0) table.touched.push_back(w);
      if (classify_wedge(s_uv, v_signs[j]) == WedgeClass::kSymmetric) {
        ++table.symmetric[w];
      } else {
        ++table.asymmetric[w];
      }
      ++totals.wedges;
    }
  }
  for (const VertexId w : table.touched) {
    const std::uint64_t l = table.symmetric[w];
    const std::uint64_t m = table.asymmetric[w];
    totals.balanced += pair_contribution(l, m);
    totals.unbalanced += static_cast<Count>(l) * m;
    totals.wedge_pairs += choose2(l + m);
    ++totals.pairs;
    on_pair(u, w, l, m);
    table.symmetric[w] = 0;
    table.asymmetric[w] = 0;
  }
  table.touched.clear();
}

}  // namespace sbb::detail
