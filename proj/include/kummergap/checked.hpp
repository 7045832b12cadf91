#pragma once

// Overflow-checked int64 helpers and the integer floor/ceil/mod conventions
// used throughout (b mod a is the least nonnegative residue).

#include <cstdint>
#include <numeric>

#include "kummergap/error.hpp"

namespace kummergap {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::Overflow, "integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return out;
}

// Requires b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

// Requires b > 0.
inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

// Requires b > 0. Result in [0, b).
inline Int mod(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

// Inverse of a modulo m in [1, m-1]; requires gcd(a, m) = 1 and m >= 2.
inline Int mod_inverse(Int a, Int m) {
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) fail(ErrorCode::InvalidArgument, "value is not invertible modulo m");
  return mod(old_s, m);
}

}  // namespace kummergap
