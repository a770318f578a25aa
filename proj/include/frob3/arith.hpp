#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "frob3/error.hpp"

// Overflow-checked 64-bit helpers. Everything that can exceed int64 throws
// errc::overflow instead of wrapping.
namespace frob3::arith {

__extension__ typedef __int128 int128;

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw error(errc::overflow, "integer overflow in " + std::to_string(a) +
                                    " * " + std::to_string(b));
  return r;
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw error(errc::overflow, "integer overflow in " + std::to_string(a) +
                                    " + " + std::to_string(b));
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw error(errc::overflow, "integer overflow in " + std::to_string(a) +
                                    " - " + std::to_string(b));
  return r;
}

inline std::int64_t narrow(int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw error(errc::overflow, "value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

/// Exact integer square root of a non-negative 128-bit value, or nullopt if
/// the value is not a perfect square.
std::optional<std::int64_t> exact_sqrt(int128 v);

/// floor(sqrt(v)) for v >= 0.
std::int64_t isqrt(int128 v);

/// Number of pairs (x, y) of non-negative integers with x*a + y*b == n.
/// Requires a, b >= 1.
std::int64_t count_representations(std::int64_t n, std::int64_t a,
                                   std::int64_t b);

inline std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

} // namespace frob3::arith
