#include <algorithm>
#include <string>

#include "sbb/count.hpp"
#include "sbb/error.hpp"

namespace sbb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateEdge: return "DuplicateEdge";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kUnknownVertex: return "UnknownVertex";
    case ErrorKind::kMalformedLine: return "MalformedLine";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kUnsignedInput: return "UnsignedInput";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kInvalidRho: return "InvalidRho";
    case ErrorKind::kInvalidTrials: return "InvalidTrials";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kSamePartitionRequired: return "SamePartitionRequired";
    case ErrorKind::kIdenticalVertices: return "IdenticalVertices";
  }
  return "Unknown";
}

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Count checked_add(Count a, Count b) {
  Count sum;
  if (__builtin_add_overflow(a, b, &sum)) {
    throw Error(ErrorKind::kOverflow, "butterfly count exceeds 128-bit accumulator");
  }
  return sum;
}

}  // namespace sbb
