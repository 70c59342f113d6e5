#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sbb {

enum class ErrorKind {
  kDuplicateEdge,
  kIndexOutOfRange,
  kUnknownVertex,
  kMalformedLine,
  kEmptyInput,
  kUnsignedInput,
  kTooLarge,
  kOverflow,
  kInvalidRho,
  kInvalidTrials,
  kInvalidArgument,
  kSamePartitionRequired,
  kIdenticalVertices,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  ErrorKind kind() const { return kind_; }
  // 1-based line number for parse errors.
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace sbb
