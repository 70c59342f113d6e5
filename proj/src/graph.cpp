#include "sbb/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "sbb/error.hpp"

namespace sbb {

PriorityOrder::PriorityOrder(std::vector<std::uint32_t> rank) : rank_(std::move(rank)) {}

std::vector<VertexId> PriorityOrder::descending() const {
  std::vector<VertexId> order(rank_.size());
  for (VertexId v = 0; v < rank_.size(); ++v) order[rank_.size() - 1 - rank_[v]] = v;
  return order;
}

PriorityOrder compute_priority(std::span<const std::uint32_t> degrees) {
  std::vector<VertexId> order(degrees.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return degrees[a] != degrees[b] ? degrees[a] < degrees[b] : a < b;
  });
  std::vector<std::uint32_t> rank(degrees.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return PriorityOrder(std::move(rank));
}

VertexId SignedBipartiteGraph::global_id(VertexRef v) const {
  if (!contains(v)) {
    throw Error(ErrorKind::kUnknownVertex,
                std::string(v.partition == Partition::kLeft ? "left" : "right") +
                    " vertex " + std::to_string(v.index) + " not in graph");
  }
  return v.partition == Partition::kLeft ? v.index
                                         : static_cast<VertexId>(left_count_ + v.index);
}

VertexRef SignedBipartiteGraph::vertex_ref(VertexId id) const {
  if (id >= vertex_count()) {
    throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(id) + " not in graph");
  }
  if (id < left_count_) return VertexRef::left(id);
  return VertexRef::right(static_cast<std::uint32_t>(id - left_count_));
}

bool SignedBipartiteGraph::contains(VertexRef v) const {
  return v.index < (v.partition == Partition::kLeft ? left_count_ : right_count_);
}

std::optional<Sign> SignedBipartiteGraph::edge_sign(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  auto nbrs = neighbors(a);
  const std::uint32_t target = rank(b);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), target,
                             [&](VertexId x, std::uint32_t r) { return rank(x) < r; });
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return signs(a)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::vector<SignedEdge> SignedBipartiteGraph::edges() const {
  std::vector<SignedEdge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < left_count_; ++u) {
    auto nbrs = neighbors(u);
    auto sg = signs(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      out.push_back({u, static_cast<std::uint32_t>(nbrs[i] - left_count_), sg[i]});
    }
  }
  std::sort(out.begin(), out.end(), [](const SignedEdge& a, const SignedEdge& b) {
    return a.left != b.left ? a.left < b.left : a.right < b.right;
  });
  return out;
}

std::vector<std::uint32_t> SignedBipartiteGraph::degrees() const {
  std::vector<std::uint32_t> deg(vertex_count());
  for (VertexId v = 0; v < deg.size(); ++v) deg[v] = degree(v);
  return deg;
}

bool operator==(const SignedBipartiteGraph& a, const SignedBipartiteGraph& b) {
  return a.left_count_ == b.left_count_ && a.right_count_ == b.right_count_ &&
         a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_ && a.signs_ == b.signs_;
}

SignedBipartiteGraph build_graph(std::size_t left_count, std::size_t right_count,
                                 std::span<const SignedEdge> edges) {
  const std::size_t n = left_count + right_count;
  if (n > std::numeric_limits<VertexId>::max() ||
      edges.size() > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw Error(ErrorKind::kTooLarge, "graph exceeds 32-bit vertex or edge capacity");
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size());
  std::vector<std::uint32_t> degree(n, 0);
  for (const auto& e : edges) {
    if (e.left >= left_count || e.right >= right_count) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "edge (" + std::to_string(e.left) + "," + std::to_string(e.right) +
                      ") out of range for " + std::to_string(left_count) + "x" +
                      std::to_string(right_count) + " graph");
    }
    if (!seen.insert((std::uint64_t{e.left} << 32) | e.right).second) {
      throw Error(ErrorKind::kDuplicateEdge, "duplicate edge (" + std::to_string(e.left) +
                                                 "," + std::to_string(e.right) + ")");
    }
    ++degree[e.left];
    ++degree[left_count + e.right];
  }

  SignedBipartiteGraph g;
  g.left_count_ = left_count;
  g.right_count_ = right_count;
  g.priority_ = compute_priority(degree);
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];

  std::vector<std::vector<std::pair<VertexId, Sign>>> incident(n);
  for (const auto& e : edges) {
    const auto r = static_cast<VertexId>(left_count + e.right);
    incident[e.left].emplace_back(r, e.sign);
    incident[r].emplace_back(e.left, e.sign);
  }
  g.neighbors_.resize(g.offsets_[n]);
  g.signs_.resize(g.offsets_[n]);
  for (VertexId v = 0; v < n; ++v) {
    auto& list = incident[v];
    std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      return g.priority_.rank(a.first) < g.priority_.rank(b.first);
    });
    for (std::size_t i = 0; i < list.size(); ++i) {
      g.neighbors_[g.offsets_[v] + i] = list[i].first;
      g.signs_[g.offsets_[v] + i] = list[i].second;
    }
  }
  return g;
}

SignedBipartiteGraph switch_vertex(const SignedBipartiteGraph& graph, VertexRef v) {
  (void)graph.global_id(v);
  auto edges = graph.edges();
  for (auto& e : edges) {
    const bool incident = v.partition == Partition::kLeft ? e.left == v.index
                                                          : e.right == v.index;
    if (incident) e.sign = flip(e.sign);
  }
  return build_graph(graph.left_count(), graph.right_count(), edges);
}

SignedBipartiteGraph negate_all(const SignedBipartiteGraph& graph) {
  auto edges = graph.edges();
  for (auto& e : edges) e.sign = flip(e.sign);
  return build_graph(graph.left_count(), graph.right_count(), edges);
}

}  // namespace sbb
