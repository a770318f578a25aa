#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frob3/core.hpp"
#include "frob3/johnson.hpp"

// Brute-force ground truth. Nothing here uses the closed forms or the series
// machinery; it only marks sums of generators in a table.
namespace frob3::oracle {

class RepresentabilityTable {
public:
  RepresentabilityTable(std::vector<std::int64_t> generators, std::int64_t bound);

  std::int64_t bound() const noexcept { return bound_; }
  /// Membership of n in the semigroup; n must lie in [0, bound].
  bool contains(std::int64_t n) const;
  /// Elements in [0, bound] that are not marked (positive integers only).
  std::vector<std::int64_t> unmarked() const;

private:
  std::int64_t bound_;
  std::vector<bool> bits_;
};

/// Table bound that contains every gap: d1 d2 when d1, d2 are coprime, the
/// Schur bound d1 * dm otherwise.
std::int64_t default_bound(const Generators& gens);

RepresentabilityTable build_table(const Generators& gens,
                                  std::optional<std::int64_t> bound = std::nullopt);

GapSet gaps_bruteforce(const Generators& gens);
std::int64_t frobenius_bruteforce(const Generators& gens);
std::int64_t genus_bruteforce(const Generators& gens);

/// Coefficients of the Hilbert series 0..horizon as 0/1 values.
std::vector<std::int64_t> hilbert_bruteforce(const Generators& gens, std::int64_t horizon);

/// Linear scan v = 2, 3, ... until v d_k is a sum of the other generators.
DiagonalTriple johnson_direct(const Generators& gens);

} // namespace frob3::oracle
