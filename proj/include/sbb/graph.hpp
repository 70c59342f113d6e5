#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sbb/sign.hpp"

namespace sbb {

using VertexId = std::uint32_t;

enum class Partition : std::uint8_t { kLeft, kRight };

// A vertex addressed by its partition and its position within it. Global ids
// are 0..|U|-1 for the left side and |U|..|U|+|V|-1 for the right side.
struct VertexRef {
  Partition partition;
  std::uint32_t index;

  static VertexRef left(std::uint32_t i) { return {Partition::kLeft, i}; }
  static VertexRef right(std::uint32_t i) { return {Partition::kRight, i}; }

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

struct SignedEdge {
  std::uint32_t left;
  std::uint32_t right;
  Sign sign;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Strict total order over all vertices: higher degree first, ties broken by
// the larger global id.
class PriorityOrder {
 public:
  PriorityOrder() = default;
  explicit PriorityOrder(std::vector<std::uint32_t> rank);

  std::uint32_t rank(VertexId v) const { return rank_[v]; }
  bool higher(VertexId a, VertexId b) const { return rank_[a] > rank_[b]; }
  std::size_t size() const { return rank_.size(); }

  // Vertices sorted from highest to lowest rank.
  std::vector<VertexId> descending() const;
  std::span<const std::uint32_t> ranks() const { return rank_; }

 private:
  std::vector<std::uint32_t> rank_;
};

PriorityOrder compute_priority(std::span<const std::uint32_t> degrees);

// Immutable signed bipartite graph in CSR form over global ids. Each
// adjacency list is sorted ascending by the neighbor's priority rank.
class SignedBipartiteGraph {
 public:
  SignedBipartiteGraph() = default;

  std::size_t left_count() const { return left_count_; }
  std::size_t right_count() const { return right_count_; }
  std::size_t vertex_count() const { return left_count_ + right_count_; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  VertexId global_id(VertexRef v) const;
  VertexRef vertex_ref(VertexId id) const;
  bool contains(VertexRef v) const;
  bool is_left(VertexId id) const { return id < left_count_; }

  std::uint32_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }
  std::span<const Sign> signs(VertexId v) const {
    return {signs_.data() + offsets_[v], degree(v)};
  }

  const PriorityOrder& priority() const { return priority_; }
  std::uint32_t rank(VertexId v) const { return priority_.rank(v); }

  std::optional<Sign> edge_sign(VertexId a, VertexId b) const;

  // All edges ordered by (left, right).
  std::vector<SignedEdge> edges() const;

  std::vector<std::uint32_t> degrees() const;

  friend bool operator==(const SignedBipartiteGraph& a, const SignedBipartiteGraph& b);

 private:
  friend SignedBipartiteGraph build_graph(std::size_t, std::size_t,
                                          std::span<const SignedEdge>);

  std::size_t left_count_ = 0;
  std::size_t right_count_ = 0;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<Sign> signs_;
  PriorityOrder priority_;
};

// Throws Error(kIndexOutOfRange) or Error(kDuplicateEdge).
SignedBipartiteGraph build_graph(std::size_t left_count, std::size_t right_count,
                                 std::span<const SignedEdge> edges);

// Flips the sign of every edge incident to v. Throws Error(kUnknownVertex).
SignedBipartiteGraph switch_vertex(const SignedBipartiteGraph& graph, VertexRef v);

SignedBipartiteGraph negate_all(const SignedBipartiteGraph& graph);

}  // namespace sbb
