#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frob3/core.hpp"

namespace frob3 {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(const CheckResult&) const = default;
};

struct VerifyOptions {
  /// Negative control: shift the formula Frobenius number by one before
  /// comparing, so every tuple must fail.
  bool inject_fault = false;
};

/// Formula-versus-oracle checks for one triple: Frobenius number, genus,
/// numerator identity, three-way diagonal agreement, off-diagonal root
/// selection, H + Phi = 1/(1-z), and the gap structure of the multiples of d3.
std::vector<CheckResult> verify_tuple(const Generators& gens,
                                      const VerifyOptions& options = {});

/// `count` valid triples with 3 <= d1 < d2 < d3 <= max_d drawn from a
/// seeded mt19937_64; invalid draws are skipped, so the sequence depends only
/// on the seed and max_d.
std::vector<Generators> random_triples(std::size_t count, std::int64_t max_d,
                                       std::uint64_t seed);

} // namespace frob3
