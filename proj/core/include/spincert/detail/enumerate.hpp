#pragma once

#include <cstddef>

namespace spincert::detail {

// Balanced digit order 0, 1, -1, 2, -2, ... used by all deterministic
// searches so results do not depend on internal scheduling.
inline long balanced_digit(std::size_t index) {
  if (index == 0) return 0;
  long k = static_cast<long>((index + 1) / 2);
  return (index % 2 == 1) ? k : -k;
}

inline std::size_t balanced_digit_count(long radius) {
  return static_cast<std::size_t>(2 * radius + 1);
}

}  // namespace spincert::detail
