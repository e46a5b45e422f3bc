#pragma once

#include <cstdint>

#include "taut0/errors.hpp"

namespace taut0 {

// All arithmetic on user-supplied magnitudes goes through these helpers.
// Overflow is reported as an error, never wrapped.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(Errc::Overflow, "integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(Errc::Overflow, "integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(Errc::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace taut0
