#pragma once

#include <cstdint>
#include <vector>

#include "sbb/count.hpp"
#include "sbb/graph.hpp"

namespace sbb {

enum class RankMetric { kPositiveButterflies, kPositiveDegree };

struct RankedEntry {
  VertexId id;
  Count score;

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

// Descending by score, ties by ascending global id.
struct RankedList {
  RankMetric metric;
  std::vector<RankedEntry> entries;
};

// Same vertex sets, Positive edges only.
SignedBipartiteGraph positive_subgraph(const SignedBipartiteGraph& graph);

// All-positive butterflies through each vertex, indexed by global id.
std::vector<Count> positive_butterflies_per_vertex(const SignedBipartiteGraph& graph);

// All-positive butterflies containing both a and b: C(c, 2) for c common
// positive neighbors. Throws Error(kSamePartitionRequired),
// Error(kIdenticalVertices) or Error(kUnknownVertex).
Count pair_collaboration(const SignedBipartiteGraph& graph, VertexRef a, VertexRef b);

std::vector<std::uint32_t> positive_degrees(const SignedBipartiteGraph& graph);

// Throws Error(kInvalidArgument) when k is 0.
RankedList top_k(const SignedBipartiteGraph& graph, RankMetric metric, std::size_t k);

}  // namespace sbb
