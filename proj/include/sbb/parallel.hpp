#pragma once

#include <cstddef>

#include "sbb/exact.hpp"

namespace sbb {

enum class ChunkingKind { kStatic, kGuided };

struct Chunking {
  ChunkingKind kind = ChunkingKind::kGuided;
  std::size_t min_chunk = 16;  // Guided only

  static Chunking static_blocks() { return {ChunkingKind::kStatic, 1}; }
  static Chunking guided(std::size_t min_chunk = 16) { return {ChunkingKind::kGuided, min_chunk}; }
};

struct ParallelConfig {
  std::size_t worker_count = 1;
  Chunking chunking{};
};

// Bucket counting with start vertices split across workers. Each worker owns
// its bucket table and partial totals; partials are summed in worker order.
// Counts are identical to bb_bucket for every configuration.
// Throws Error(kInvalidArgument) when worker_count is 0.
CountReport par_bb_bucket(const SignedBipartiteGraph& graph, const ParallelConfig& config);

}  // namespace sbb
