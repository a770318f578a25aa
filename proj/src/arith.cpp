#include "frob3/arith.hpp"

#include <cmath>

namespace frob3 {

std::string_view to_string(errc code) noexcept {
  switch (code) {
  case errc::invalid_length: return "invalid_length";
  case errc::not_strictly_increasing: return "not_strictly_increasing";
  case errc::gcd_not_one: return "gcd_not_one";
  case errc::multiplicity_too_small: return "multiplicity_too_small";
  case errc::non_minimal: return "non_minimal";
  case errc::overflow: return "overflow";
  case errc::pair_too_small: return "pair_too_small";
  case errc::horizon_too_small: return "horizon_too_small";
  case errc::not_characteristic: return "not_characteristic";
  case errc::invalid_contour: return "invalid_contour";
  case errc::no_zero_in_range: return "no_zero_in_range";
  case errc::symmetric_semigroup: return "symmetric_semigroup";
  case errc::not_perfect_square: return "not_perfect_square";
  case errc::root_selection_ambiguous: return "root_selection_ambiguous";
  case errc::no_valid_assembly: return "no_valid_assembly";
  case errc::range_error: return "range_error";
  case errc::invariant_violation: return "invariant_violation";
  }
  return "unknown";
}

namespace arith {

std::int64_t isqrt(int128 v) {
  if (v < 0) throw error(errc::invariant_violation, "isqrt of negative value");
  auto r = static_cast<int128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return narrow(r);
}

std::optional<std::int64_t> exact_sqrt(int128 v) {
  if (v < 0) return std::nullopt;
  const std::int64_t r = isqrt(v);
  if (static_cast<int128>(r) * r != v) return std::nullopt;
  return r;
}

namespace {

// Inverse of a modulo m, gcd(a, m) == 1, m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t inv = old_s % m;
  return inv < 0 ? inv + m : inv;
}

} // namespace

std::int64_t count_representations(std::int64_t n, std::int64_t a,
                                   std::int64_t b) {
  if (n < 0) return 0;
  const std::int64_t g = std::gcd(a, b);
  if (n % g != 0) return 0;
  const std::int64_t ar = a / g, br = b / g, nr = n / g;
  // y * br == nr (mod ar)
  const std::int64_t y0 = static_cast<std::int64_t>(
      static_cast<int128>(nr % ar) * mod_inverse(br % ar, ar) % ar);
  const std::int64_t y_max = nr / br;
  if (y0 > y_max) return 0;
  return (y_max - y0) / ar + 1;
}

} // namespace arith
} // namespace frob3
