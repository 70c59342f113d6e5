#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "sbb/count.hpp"
#include "sbb/graph.hpp"

namespace sbb {

enum class WedgeClass : std::uint8_t { kSymmetric, kAsymmetric };

// Balanced iff an even number of the four signs are negative.
inline constexpr bool is_balanced(Sign s1, Sign s2, Sign s3, Sign s4) {
  return ((static_cast<unsigned>(s1) ^ static_cast<unsigned>(s2) ^ static_cast<unsigned>(s3) ^
           static_cast<unsigned>(s4)) &
          1u) == 0;
}

inline constexpr WedgeClass classify_wedge(Sign s1, Sign s2) {
  return s1 == s2 ? WedgeClass::kSymmetric : WedgeClass::kAsymmetric;
}

// Balanced butterflies through one (start, end) pair with l symmetric and m
// asymmetric wedges between them.
inline constexpr Count pair_contribution(std::uint64_t l, std::uint64_t m) {
  return choose2(l) + choose2(m);
}

struct CountReport {
  Count balanced = 0;
  Count unbalanced = 0;
  Count total = 0;
  // Priority-eligible wedges enumerated.
  std::uint64_t wedges_processed = 0;
  // Middle-vertex pairs inspected by the baseline; zero for bucket counters.
  Count pair_checks = 0;
  // Sum over visited (start, end) pairs of C(l+m, 2); bucket counters only.
  Count wedge_pairs = 0;
  // (start, end) pairs with at least one eligible wedge.
  std::uint64_t visited_pairs = 0;
  std::chrono::duration<double, std::milli> wall_time{0};

  bool same_counts(const CountReport& o) const {
    return balanced == o.balanced && unbalanced == o.unbalanced && total == o.total;
  }
};

struct BruteForceOptions {
  std::uint64_t max_cells = 1'000'000;  // guard on |U|*|V|
  bool override_guard = false;
};

// Exhaustive enumeration of every (u_i < u_j, v_i < v_j) quadruple.
// Throws Error(kTooLarge) past the guard.
CountReport brute_force_count(const SignedBipartiteGraph& graph,
                              const BruteForceOptions& options = {});

// Vertex-priority baseline: stores signed middle vertices per end vertex and
// checks every middle pair.
CountReport bb_base(const SignedBipartiteGraph& graph);

// Wedge bucketing: per (start, end) pair, symmetric and asymmetric wedge
// tallies give balanced = C(l,2) + C(m,2) and unbalanced = l*m.
CountReport bb_bucket(const SignedBipartiteGraph& graph);

// Called once per visited (start, end) pair with its wedge tallies.
using BucketPairVisitor =
    std::function<void(VertexId start, VertexId end, std::uint64_t l, std::uint64_t m)>;
CountReport bb_bucket(const SignedBipartiteGraph& graph, const BucketPairVisitor& visit);

// Called once per visited (start, end) pair with the number of middle-vertex
// pairs the baseline checked there.
using BasePairVisitor =
    std::function<void(VertexId start, VertexId end, std::uint64_t middles, Count checks)>;
CountReport bb_base(const SignedBipartiteGraph& graph, const BasePairVisitor& visit);

// Balanced butterflies containing u. Throws Error(kUnknownVertex).
Count vbbfc(const SignedBipartiteGraph& graph, VertexRef u);

// Indexed by global id.
std::vector<Count> per_vertex_counts(const SignedBipartiteGraph& graph);

}  // namespace sbb
