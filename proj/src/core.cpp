#include "frob3/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frob3/arith.hpp"
#include "frob3/error.hpp"

namespace frob3 {

Axis axis_from_number(int k) {
  if (k < 1 || k > 3)
    throw error(errc::range_error,
                "axis must be 1, 2 or 3, got " + std::to_string(k));
  return static_cast<Axis>(k - 1);
}

std::array<Axis, 2> complement(Axis k) noexcept {
  const auto i = index(k);
  return {static_cast<Axis>((i + 1) % 3), static_cast<Axis>((i + 2) % 3)};
}

bool GapSet::contains(std::int64_t n) const {
  return std::binary_search(elements.begin(), elements.end(), n);
}

Generators Generators::validate(std::span<const std::int64_t> raw,
                                const Limits& limits) {
  if (raw.empty() || raw.size() > 3)
    throw error(errc::invalid_length,
                "expected 1 to 3 generators, got " + std::to_string(raw.size()));
  const auto m = static_cast<std::int64_t>(raw.size());

  for (std::size_t i = 1; i < raw.size(); ++i)
    if (raw[i] <= raw[i - 1])
      throw error(errc::not_strictly_increasing,
                  "generators must be strictly increasing");
  if (m == 1 ? raw[0] < 2 : raw[0] < m)
    throw error(errc::multiplicity_too_small,
                "smallest generator " + std::to_string(raw[0]) +
                    " must be at least " + std::to_string(std::max<std::int64_t>(m, 2)));

  std::int64_t product = 1;
  for (auto d : raw) {
    if (__builtin_mul_overflow(product, d, &product) || product > limits.max_product)
      throw error(errc::overflow, "product of generators exceeds the guard " +
                                      std::to_string(limits.max_product));
  }

  Generators g;
  std::copy(raw.begin(), raw.end(), g.d_.begin());
  g.size_ = raw.size();
  if (m == 1) return g;

  std::int64_t common = 0;
  for (auto d : raw) common = std::gcd(common, d);
  if (common != 1)
    throw error(errc::gcd_not_one,
                "gcd is " + std::to_string(common) + ", must be 1", common);

  auto reject = [&](std::size_t i) {
    throw error(errc::non_minimal,
                "generator " + std::to_string(i + 1) + " (" +
                    std::to_string(raw[i]) +
                    ") is a combination of the other generators",
                static_cast<std::int64_t>(i + 1));
  };
  if (m == 2) {
    if (raw[1] % raw[0] == 0) reject(1);
    return g;
  }
  if (representable_by_pair(raw[2], raw[0], raw[1])) reject(2);
  if (representable_by_pair(raw[1], raw[0], raw[2])) reject(1);
  if (representable_by_pair(raw[0], raw[1], raw[2])) reject(0);
  return g;
}

std::int64_t Generators::sum() const noexcept {
  std::int64_t s = 0;
  for (auto d : values()) s += d;
  return s;
}

std::string Generators::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < size_; ++i) out << (i ? "," : "") << d_[i];
  out << ')';
  return out.str();
}

bool representable_by_pair(std::int64_t target, std::int64_t a, std::int64_t b) {
  if (target < 0) return false;
  if (a > b) std::swap(a, b);
  // Scan the multiples of the larger generator over one residue period of the
  // smaller; beyond that the residues repeat.
  for (std::int64_t y = 0; y < a; ++y) {
    const std::int64_t rest = target - y * b;
    if (rest < 0) break;
    if (rest % a == 0) return true;
  }
  return false;
}

namespace {

void require_pair(const Generators& gens) {
  if (gens.size() != 2)
    throw error(errc::invalid_length, "operation needs exactly two generators");
}

} // namespace

bool is_representable(std::int64_t target, const Generators& gens) {
  require_pair(gens);
  return representable_by_pair(target, gens[0], gens[1]);
}

PairInvariants sylvester_pair(const Generators& gens) {
  require_pair(gens);
  const std::int64_t d1 = gens[0], d2 = gens[1];
  const std::int64_t f = arith::sub(arith::sub(arith::mul(d1, d2), d1), d2);
  const std::int64_t g = arith::mul(d1 - 1, d2 - 1) / 2;
  return {f, g};
}

ClosedForm closed_form(const Generators& gens) {
  if (gens.size() == 1) return {Infinite{}, Infinite{}};
  if (gens.size() == 2) {
    const auto p = sylvester_pair(gens);
    return {p.frobenius, p.genus};
  }
  throw error(errc::invalid_length,
              "closed_form covers one or two generators; use invariants()");
}

std::int64_t matrix_rows(const Generators& gens) {
  require_pair(gens);
  // floor(d2 - d2/d1) == floor(d2 (d1 - 1) / d1)
  return arith::mul(gens[1], gens[0] - 1) / gens[0];
}

std::vector<MatrixRepEntry> matrix_representation(const Generators& gens) {
  require_pair(gens);
  const std::int64_t d1 = gens[0], d2 = gens[1];
  if (d1 <= 2)
    throw error(errc::pair_too_small,
                "matrix representation needs d1 > 2, got " + std::to_string(d1));
  const std::int64_t rows = matrix_rows(gens);
  if (rows < d1 - 1)
    throw error(errc::invariant_violation,
                "row bound " + std::to_string(rows) + " below d1 - 1");

  const std::int64_t top = arith::mul(d1, d2);
  std::vector<MatrixRepEntry> out;
  out.reserve(static_cast<std::size_t>(arith::mul(rows, d1 - 1)));
  for (std::int64_t p = 1; p <= rows; ++p)
    for (std::int64_t q = 1; q <= d1 - 1; ++q)
      out.push_back({p, q, top - p * d1 - q * d2});
  return out;
}

} // namespace frob3
