#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frob3 {

enum class errc {
  invalid_length,
  not_strictly_increasing,
  gcd_not_one,
  multiplicity_too_small,
  non_minimal,
  overflow,
  pair_too_small,
  horizon_too_small,
  not_characteristic,
  invalid_contour,
  no_zero_in_range,
  symmetric_semigroup,
  not_perfect_square,
  root_selection_ambiguous,
  no_valid_assembly,
  range_error,
  invariant_violation,
};

/// Stable snake_case name used in JSON error objects.
std::string_view to_string(errc code) noexcept;

class error : public std::runtime_error {
public:
  error(errc code, const std::string& message, std::int64_t detail = 0)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  errc code() const noexcept { return code_; }
  /// Extra payload: the 1-based generator index for non_minimal, the gcd for
  /// gcd_not_one, zero otherwise.
  std::int64_t detail() const noexcept { return detail_; }

private:
  errc code_;
  std::int64_t detail_;
};

} // namespace frob3
