/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>

#include "ulam/error.hpp"

// Overflow-checked integer helpers. Every pair sum and every linear endpoint
// goes through these; wraparound is always an error.

namespace ulam::checked {

template <typename T>
inline T add(T x, T y) {
  T out;
  if (__builtin_add_overflow(x, y, &out)) {
    throw Error(ErrorCode::overflow, "integer overflow in addition");
  }
  return out;
}

template <typename T>
inline T sub(T x, T y) {
  T out;
  if (__builtin_sub_overflow(x, y, &out)) {
    throw Error(ErrorCode::overflow, "integer overflow in subtraction");
  }
  return out;
}

template <typename T>
inline T mul(T x, T y) {
  T out;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw Error(ErrorCode::overflow, "integer overflow in multiplication");
  }
  return out;
}

/// Conversion that refuses to change the value.
template <typename To, typename From>
inline To narrow(From v) {
  To out = static_cast<To>(v);
  if (static_cast<From>(out) != v || ((out < To{}) != (v < From{}))) {
    throw Error(ErrorCode::overflow, "integer value out of range");
  }
  return out;
}

/// Euclidean remainder: result in [0, m) for m > 0.
inline std::int64_t emod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace ulam::checked
