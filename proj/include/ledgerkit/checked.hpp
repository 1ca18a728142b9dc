#pragma once

#include <cstdint>

#include "ledgerkit/errors.hpp"

namespace ledgerkit {

// All balance and flow arithmetic goes through these. Overflow is an error,
// never wraparound.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit balance arithmetic overflowed in addition");
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("64-bit balance arithmetic overflowed in subtraction");
  }
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("64-bit balance arithmetic overflowed in multiplication");
  }
  return r;
}

}  // namespace ledgerkit
