#pragma once

#include <cstdint>

namespace sbb {

enum class Sign : std::uint8_t { kPositive = 0, kNegative = 1 };

// Same signs give Positive, different signs give Negative.
inline constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPositive : Sign::kNegative;
}

inline constexpr Sign flip(Sign s) {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}

inline constexpr char to_char(Sign s) { return s == Sign::kPositive ? '+' : '-'; }

}  // namespace sbb
