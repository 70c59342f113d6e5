#pragma once

#include <cstdint>
#include <string>

namespace sbb {

// Butterfly counts reach 1e13 on large graphs and C(k,2) intermediates can
// exceed 64 bits on skewed inputs.
using Count = unsigned __int128;

std::string to_string(Count value);

// Throws Error(kOverflow) instead of wrapping.
Count checked_add(Count a, Count b);

inline constexpr Count choose2(std::uint64_t k) {
  return k < 2 ? Count{0} : static_cast<Count>(k) * (k - 1) / 2;
}

}  // namespace sbb
