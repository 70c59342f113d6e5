#include "sbb/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "sbb/detail/wedge_scan.hpp"
#include "sbb/error.hpp"

namespace sbb {
namespace {

struct alignas(64) Partial {
  Count balanced = 0;
  Count unbalanced = 0;
  Count wedge_pairs = 0;
  std::uint64_t wedges = 0;
  std::uint64_t pairs = 0;

  void add(const detail::StartTotals& t) {
    balanced = checked_add(balanced, t.balanced);
    unbalanced = checked_add(unbalanced, t.unbalanced);
    wedge_pairs = checked_add(wedge_pairs, t.wedge_pairs);
    wedges += t.wedges;
    pairs += t.pairs;
  }
};

// Hands out [begin, end) ranges of the start order. Guided chunks shrink as
// work drains: max(min_chunk, remaining / (2 * workers)).
class GuidedCursor {
 public:
  GuidedCursor(std::size_t total, std::size_t workers, std::size_t min_chunk)
      : total_(total), workers_(workers), min_chunk_(std::max<std::size_t>(1, min_chunk)) {}

  bool next(std::size_t& begin, std::size_t& end) {
    std::size_t cur = next_.load(std::memory_order_relaxed);
    while (cur < total_) {
      const std::size_t remaining = total_ - cur;
      const std::size_t chunk =
          std::min(remaining, std::max(min_chunk_, remaining / (2 * workers_)));
      if (next_.compare_exchange_weak(cur, cur + chunk, std::memory_order_relaxed)) {
        begin = cur;
        end = cur + chunk;
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t total_;
  std::size_t workers_;
  std::size_t min_chunk_;
  std::atomic<std::size_t> next_{0};
};

}  // namespace

CountReport par_bb_bucket(const SignedBipartiteGraph& g, const ParallelConfig& config) {
  if (config.worker_count == 0) {
    throw Error(ErrorKind::kInvalidArgument, "worker_count must be at least 1");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.vertex_count();
  const std::size_t workers = std::min(config.worker_count, std::max<std::size_t>(1, n));

  // Highest-degree start vertices first; they carry the most wedges.
  std::vector<VertexId> order;
  if (config.chunking.kind == ChunkingKind::kGuided) {
    order = g.priority().descending();
  } else {
    order.resize(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
  }

  std::vector<Partial> partials(workers);
  std::vector<std::exception_ptr> errors(workers);
  GuidedCursor cursor(n, workers, config.chunking.min_chunk);

  auto work = [&](std::size_t w) {
    try {
      detail::WedgeBucketTable table(n);
      auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          detail::StartTotals totals;
          detail::bucket_start_vertex(g, order[i], table, totals,
                                      [](VertexId, VertexId, std::uint64_t, std::uint64_t) {});
          partials[w].add(totals);
        }
      };
      if (config.chunking.kind == ChunkingKind::kStatic) {
        run(n * w / workers, n * (w + 1) / workers);
      } else {
        std::size_t begin = 0;
        std::size_t end = 0;
        while (cursor.next(begin, end)) run(begin, end);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CountReport report;
  for (const auto& p : partials) {
    report.balanced = checked_add(report.balanced, p.balanced);
    report.unbalanced = checked_add(report.unbalanced, p.unbalanced);
    report.wedge_pairs = checked_add(report.wedge_pairs, p.wedge_pairs);
    report.wedges_processed += p.wedges;
    report.visited_pairs += p.pairs;
  }
  report.total = checked_add(report.balanced, report.unbalanced);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace sbb
