#pragma once

#include <cstdint>
#include <string_view>

#include "quartic/error.hpp"

namespace quartic {

using Int = std::int64_t;
using Wide = __int128;

namespace checked {

template <class T>
T add(T a, T b, std::string_view ctx = "addition") {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(ctx) + ": integer overflow");
  return r;
}

template <class T>
T sub(T a, T b, std::string_view ctx = "subtraction") {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError(std::string(ctx) + ": integer overflow");
  return r;
}

template <class T>
T mul(T a, T b, std::string_view ctx = "multiplication") {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(ctx) + ": integer overflow");
  return r;
}

template <class T>
T square(T a, std::string_view ctx = "square") {
  return mul(a, a, ctx);
}

template <class T>
T fourth(T a, std::string_view ctx = "fourth power") {
  return square(square(a, ctx), ctx);
}

/// Narrows a 128-bit intermediate back to 64 bits.
inline Int narrow(Wide v, std::string_view ctx = "narrowing") {
  if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN))
    throw OverflowError(std::string(ctx) + ": value exceeds 64-bit range");
  return static_cast<Int>(v);
}

}  // namespace checked
}  // namespace quartic
