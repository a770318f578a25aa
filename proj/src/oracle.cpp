#include "frob3/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "frob3/arith.hpp"
#include "frob3/error.hpp"

namespace frob3::oracle {

RepresentabilityTable::RepresentabilityTable(std::vector<std::int64_t> generators,
                                             std::int64_t bound)
    : bound_(bound) {
  if (bound < 0) throw error(errc::range_error, "table bound must be non-negative");
  if (bound > (std::int64_t{1} << 34))
    throw error(errc::overflow, "table bound " + std::to_string(bound) + " too large");
  bits_.assign(static_cast<std::size_t>(bound) + 1, false);
  bits_[0] = true;
  for (std::int64_t n = 0; n <= bound; ++n) {
    if (!bits_[n]) continue;
    for (auto d : generators)
      if (d <= bound - n) bits_[n + d] = true;
  }
}

bool RepresentabilityTable::contains(std::int64_t n) const {
  if (n < 0 || n > bound_)
    throw error(errc::range_error, std::to_string(n) + " outside the table");
  return bits_[n];
}

std::vector<std::int64_t> RepresentabilityTable::unmarked() const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= bound_; ++n)
    if (!bits_[n]) out.push_back(n);
  return out;
}

std::int64_t default_bound(const Generators& gens) {
  if (gens.size() < 2)
    throw error(errc::invalid_length, "the oracle needs at least two generators");
  if (std::gcd(gens[0], gens[1]) == 1) return arith::mul(gens[0], gens[1]);
  return arith::mul(gens[0], gens[gens.size() - 1]);
}

RepresentabilityTable build_table(const Generators& gens, std::optional<std::int64_t> bound) {
  const auto values = gens.values();
  return RepresentabilityTable({values.begin(), values.end()},
                               bound.value_or(default_bound(gens)));
}

GapSet gaps_bruteforce(const Generators& gens) {
  return GapSet{build_table(gens).unmarked()};
}

std::int64_t frobenius_bruteforce(const Generators& gens) {
  return gaps_bruteforce(gens).frobenius();
}

std::int64_t genus_bruteforce(const Generators& gens) {
  return gaps_bruteforce(gens).genus();
}

std::vector<std::int64_t> hilbert_bruteforce(const Generators& gens, std::int64_t horizon) {
  const auto table = build_table(gens, horizon);
  std::vector<std::int64_t> out(static_cast<std::size_t>(horizon) + 1);
  for (std::int64_t n = 0; n <= horizon; ++n) out[n] = table.contains(n) ? 1 : 0;
  return out;
}

DiagonalTriple johnson_direct(const Generators& gens) {
  if (gens.size() != 3)
    throw error(errc::invalid_length, "johnson_direct needs three generators");
  DiagonalTriple diag;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::int64_t dj = gens[(k + 1) % 3], dl = gens[(k + 2) % 3];
    // v = min(dj, dl) always works, so the table never needs to go further.
    const std::int64_t limit = std::min(dj, dl);
    const RepresentabilityTable table({dj, dl}, arith::mul(limit, gens[k]));
    std::int64_t v = 2;
    while (!table.contains(v * gens[k])) ++v;
    diag.a[k] = v;
  }
  return diag;
}

} // namespace frob3::oracle
