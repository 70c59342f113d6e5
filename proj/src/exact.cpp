#include "sbb/exact.hpp"

#include <string>

#include "sbb/detail/wedge_scan.hpp"
#include "sbb/error.hpp"

namespace sbb {
namespace {

using Clock = std::chrono::steady_clock;

void finish(CountReport& report, Clock::time_point start) {
  report.total = checked_add(report.balanced, report.unbalanced);
  report.wall_time = Clock::now() - start;
}

// Signed middle-vertex record kept by the baseline for each end vertex.
struct Middle {
  VertexId v;
  Sign start_edge;  // sign(u, v)
  Sign end_edge;    // sign(v, w)
};

}  // namespace

CountReport brute_force_count(const SignedBipartiteGraph& graph,
                              const BruteForceOptions& options) {
  const auto start = Clock::now();
  const std::size_t nl = graph.left_count();
  const std::size_t nr = graph.right_count();
  if (!options.override_guard && static_cast<std::uint64_t>(nl) * nr > options.max_cells) {
    throw Error(ErrorKind::kTooLarge, "brute force refused: |U|*|V| = " +
                                          std::to_string(static_cast<std::uint64_t>(nl) * nr) +
                                          " exceeds " + std::to_string(options.max_cells));
  }

  // 0 = absent, 1 = positive, 2 = negative.
  std::vector<std::uint8_t> cell(nl * nr, 0);
  for (const auto& e : graph.edges()) {
    cell[std::size_t{e.left} * nr + e.right] = e.sign == Sign::kPositive ? 1 : 2;
  }
  auto sign_of = [](std::uint8_t c) { return c == 1 ? Sign::kPositive : Sign::kNegative; };

  CountReport report;
  for (std::size_t ui = 0; ui < nl; ++ui) {
    const std::uint8_t* row_i = &cell[ui * nr];
    for (std::size_t uj = ui + 1; uj < nl; ++uj) {
      const std::uint8_t* row_j = &cell[uj * nr];
      for (std::size_t vi = 0; vi < nr; ++vi) {
        if (!row_i[vi] || !row_j[vi]) continue;
        for (std::size_t vj = vi + 1; vj < nr; ++vj) {
          if (!row_i[vj] || !row_j[vj]) continue;
          if (is_balanced(sign_of(row_i[vi]), sign_of(row_j[vi]), sign_of(row_j[vj]),
                          sign_of(row_i[vj]))) {
            ++report.balanced;
          } else {
            ++report.unbalanced;
          }
        }
      }
    }
  }
  finish(report, start);
  return report;
}

CountReport bb_base(const SignedBipartiteGraph& graph) {
  return bb_base(graph, BasePairVisitor{});
}

CountReport bb_base(const SignedBipartiteGraph& g, const BasePairVisitor& visit) {
  const auto start = Clock::now();
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Middle>> by_end(n);
  std::vector<VertexId> touched;

  CountReport report;
  for (VertexId u = 0; u < n; ++u) {
    const std::uint32_t ru = g.rank(u);
    const auto u_nbrs = g.neighbors(u);
    const auto u_signs = g.signs(u);
    for (std::size_t i = 0; i < u_nbrs.size(); ++i) {
      const VertexId v = u_nbrs[i];
      if (g.rank(v) >= ru) break;
      const auto v_nbrs = g.neighbors(v);
      const auto v_signs = g.signs(v);
      for (std::size_t j = 0; j < v_nbrs.size(); ++j) {
        const VertexId w = v_nbrs[j];
        if (g.rank(w) >= ru) break;
        if (by_end[w].empty()) touched.push_back(w);
        by_end[w].push_back({v, u_signs[i], v_signs[j]});
        ++report.wedges_processed;
      }
    }

    Count balanced = 0;
    Count unbalanced = 0;
    for (const VertexId w : touched) {
      auto& middles = by_end[w];
      Count checks = 0;
      for (std::size_t a = 0; a < middles.size(); ++a) {
        for (std::size_t b = a + 1; b < middles.size(); ++b) {
          // Cycle u - v1 - w - v2 - u.
          if (is_balanced(middles[a].start_edge, middles[a].end_edge, middles[b].end_edge,
                          middles[b].start_edge)) {
            ++balanced;
          } else {
            ++unbalanced;
          }
          ++checks;
        }
      }
      report.pair_checks = checked_add(report.pair_checks, checks);
      ++report.visited_pairs;
      if (visit) visit(u, w, middles.size(), checks);
      middles.clear();
    }
    touched.clear();
    report.balanced = checked_add(report.balanced, balanced);
    report.unbalanced = checked_add(report.unbalanced, unbalanced);
  }
  finish(report, start);
  return report;
}

CountReport bb_bucket(const SignedBipartiteGraph& graph) {
  return bb_bucket(graph, BucketPairVisitor{});
}

CountReport bb_bucket(const SignedBipartiteGraph& g, const BucketPairVisitor& visit) {
  const auto start = Clock::now();
  detail::WedgeBucketTable table(g.vertex_count());
  CountReport report;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    detail::StartTotals totals;
    detail::bucket_start_vertex(g, u, table, totals,
                                [&](VertexId s, VertexId w, std::uint64_t l, std::uint64_t m) {
                                  if (visit) visit(s, w, l, m);
                                });
    report.balanced = checked_add(report.balanced, totals.balanced);
    report.unbalanced = checked_add(report.unbalanced, totals.unbalanced);
    report.wedge_pairs = checked_add(report.wedge_pairs, totals.wedge_pairs);
    report.wedges_processed += totals.wedges;
    report.visited_pairs += totals.pairs;
  }
  finish(report, start);
  return report;
}

namespace {

Count vbbfc_at(const SignedBipartiteGraph& g, VertexId u, detail::WedgeBucketTable& table) {
  for (std::size_t i = 0; i < g.degree(u); ++i) {
    const VertexId v = g.neighbors(u)[i];
    const Sign s_uv = g.signs(u)[i];
    const auto v_nbrs = g.neighbors(v);
    const auto v_signs = g.signs(v);
    for (std::size_t j = 0; j < v_nbrs.size(); ++j) {
      const VertexId w = v_nbrs[j];
      if (w == u) continue;
      if (table.symmetric[w] == 0 && table.asymmetric[w] == 0) table.touched.push_back(w);
      if (classify_wedge(s_uv, v_signs[j]) == WedgeClass::kSymmetric) {
        ++table.symmetric[w];
      } else {
        ++table.asymmetric[w];
      }
    }
  }
  Count count = 0;
  for (const VertexId w : table.touched) {
    count += pair_contribution(table.symmetric[w], table.asymmetric[w]);
    table.symmetric[w] = 0;
    table.asymmetric[w] = 0;
  }
  table.touched.clear();
  return count;
}

}  // namespace

Count vbbfc(const SignedBipartiteGraph& graph, VertexRef u) {
  const VertexId id = graph.global_id(u);
  detail::WedgeBucketTable table(graph.vertex_count());
  return vbbfc_at(graph, id, table);
}

std::vector<Count> per_vertex_counts(const SignedBipartiteGraph& graph) {
  detail::WedgeBucketTable table(graph.vertex_count());
  std::vector<Count> counts(graph.vertex_count(), 0);
  for (VertexId u = 0; u < graph.vertex_count(); ++u) counts[u] = vbbfc_at(graph, u, table);
  return counts;
}

}  // namespace sbb
