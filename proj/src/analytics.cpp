#include "sbb/analytics.hpp"

#include <algorithm>

#include "sbb/error.hpp"
#include "sbb/exact.hpp"

namespace sbb {

SignedBipartiteGraph positive_subgraph(const SignedBipartiteGraph& graph) {
  auto edges = graph.edges();
  std::erase_if(edges, [](const SignedEdge& e) { return e.sign != Sign::kPositive; });
  return build_graph(graph.left_count(), graph.right_count(), edges);
}

std::vector<Count> positive_butterflies_per_vertex(const SignedBipartiteGraph& graph) {
  return per_vertex_counts(positive_subgraph(graph));
}

Count pair_collaboration(const SignedBipartiteGraph& graph, VertexRef a, VertexRef b) {
  const VertexId ga = graph.global_id(a);
  const VertexId gb = graph.global_id(b);
  if (a.partition != b.partition) {
    throw Error(ErrorKind::kSamePartitionRequired, "pair vertices must share a partition");
  }
  if (ga == gb) throw Error(ErrorKind::kIdenticalVertices, "pair vertices must differ");

  std::vector<bool> marked(graph.vertex_count(), false);
  for (std::size_t i = 0; i < graph.degree(ga); ++i) {
    if (graph.signs(ga)[i] == Sign::kPositive) marked[graph.neighbors(ga)[i]] = true;
  }
  std::uint64_t common = 0;
  for (std::size_t i = 0; i < graph.degree(gb); ++i) {
    if (graph.signs(gb)[i] == Sign::kPositive && marked[graph.neighbors(gb)[i]]) ++common;
  }
  return choose2(common);
}

std::vector<std::uint32_t> positive_degrees(const SignedBipartiteGraph& graph) {
  std::vector<std::uint32_t> deg(graph.vertex_count(), 0);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (Sign s : graph.signs(v)) deg[v] += s == Sign::kPositive;
  }
  return deg;
}

RankedList top_k(const SignedBipartiteGraph& graph, RankMetric metric, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "k must be at least 1");
  RankedList list{metric, {}};
  list.entries.reserve(graph.vertex_count());
  if (metric == RankMetric::kPositiveButterflies) {
    const auto counts = positive_butterflies_per_vertex(graph);
    for (VertexId v = 0; v < counts.size(); ++v) list.entries.push_back({v, counts[v]});
  } else {
    const auto deg = positive_degrees(graph);
    for (VertexId v = 0; v < deg.size(); ++v) list.entries.push_back({v, deg[v]});
  }
  std::sort(list.entries.begin(), list.entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              return a.score != b.score ? a.score > b.score : a.id < b.id;
            });
  if (list.entries.size() > k) list.entries.resize(k);
  return list;
}

}  // namespace sbb
