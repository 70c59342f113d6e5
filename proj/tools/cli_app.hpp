#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbb/count.hpp"

namespace sbb::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kGuard = 3,
  kUnknownEntity = 4,
  kDisagreement = 5,
};

inline constexpr const char* kThreadsEnv = "SBB_THREADS";

struct RunRecord {
  std::string algo;
  std::string dataset;
  std::size_t workers = 1;
  std::size_t repeat = 0;
  Count balanced = 0;
  Count unbalanced = 0;
  Count total = 0;
  double wall_time_ms = 0.0;
};

// Index of the first record whose counts differ from records[0], if any.
std::optional<std::size_t> find_disagreement(const std::vector<RunRecord>& records);

// Thread count: explicit flag, else $SBB_THREADS, else hardware concurrency.
std::size_t resolve_threads(std::optional<std::size_t> flag, const char* env_value);

// Runs the sbb command line; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbb::cli
