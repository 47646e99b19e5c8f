#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace fracsq {

inline constexpr std::uint64_t kDefaultCellLimit = 100'000'000;

/// Cell budget honoured by every operation that materializes cells.
/// FRACSQ_CELL_LIMIT overrides the default when set to a positive integer.
inline std::uint64_t cell_limit_from_env() {
  const char* raw = std::getenv("FRACSQ_CELL_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultCellLimit;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw Error("config", "FRACSQ_CELL_LIMIT must be a positive integer, got '" + std::string(raw) + "'");
  return v;
}

/// |base|^exp, or 0 if the value exceeds `cap`.
inline std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return 0;
    r *= base;
  }
  return r;
}

}  // namespace fracsq
