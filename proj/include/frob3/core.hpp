#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace frob3 {

/// Position of a generator inside a validated tuple (0-based).
enum class Axis : std::uint8_t { first = 0, second = 1, third = 2 };

inline constexpr std::array<Axis, 3> all_axes{Axis::first, Axis::second,
                                              Axis::third};

constexpr std::size_t index(Axis a) noexcept {
  return static_cast<std::size_t>(a);
}

/// Axis from a 1-based number as used on the command line; throws range_error.
Axis axis_from_number(int k);

/// The two axes other than `k`, in cyclic order (k+1, k+2).
std::array<Axis, 2> complement(Axis k) noexcept;

/// Default guard on d1*d2*d3 (resp. d1*d2). Override through Limits or the
/// FROB3_MAX_PRODUCT environment variable in the CLI.
inline constexpr std::int64_t default_max_product = std::int64_t{1} << 40;

struct Limits {
  std::int64_t max_product = default_max_product;
};

/// A validated minimal generating tuple d1 < ... < dm with m in {1,2,3}.
///
/// For m >= 2 the tuple has gcd 1, multiplicity d1 >= m and no generator is a
/// non-negative combination of the others. The single-generator case (d >= 2)
/// describes the degenerate semigroup dN with infinitely many gaps.
class Generators {
public:
  static Generators validate(std::span<const std::int64_t> raw,
                             const Limits& limits = {});
  static Generators validate(std::initializer_list<std::int64_t> raw,
                             const Limits& limits = {}) {
    return validate(std::span<const std::int64_t>(raw.begin(), raw.size()),
                    limits);
  }

  std::size_t size() const noexcept { return size_; }
  std::int64_t operator[](std::size_t i) const noexcept { return d_[i]; }
  std::int64_t operator[](Axis a) const noexcept { return d_[index(a)]; }
  std::span<const std::int64_t> values() const noexcept {
    return {d_.data(), size_};
  }
  std::int64_t sum() const noexcept;
  std::string to_string() const;

  bool operator==(const Generators&) const = default;

private:
  Generators() = default;
  std::array<std::int64_t, 3> d_{};
  std::size_t size_ = 0;
};

/// Positive integers outside the semigroup, sorted ascending.
struct GapSet {
  std::vector<std::int64_t> elements;

  std::int64_t frobenius() const { return elements.empty() ? -1 : elements.back(); }
  std::int64_t genus() const { return static_cast<std::int64_t>(elements.size()); }
  bool contains(std::int64_t n) const;
};

/// Marker for the infinite Frobenius number and genus of a one-generator
/// semigroup.
struct Infinite {
  bool operator==(const Infinite&) const = default;
};
using Extended = std::variant<std::int64_t, Infinite>;

struct ClosedForm {
  Extended frobenius;
  Extended genus;
};

struct PairInvariants {
  std::int64_t frobenius;
  std::int64_t genus;
};

/// True iff target = x*a + y*b for some x, y >= 0. Works for any a, b >= 1,
/// including non-coprime pairs taken from a triple.
bool representable_by_pair(std::int64_t target, std::int64_t a, std::int64_t b);

/// Representability in a validated two-generator semigroup.
bool is_representable(std::int64_t target, const Generators& gens);

/// F = d1 d2 - d1 - d2 and G = (d1 - 1)(d2 - 1)/2 for a coprime pair.
PairInvariants sylvester_pair(const Generators& gens);

/// Frobenius number and genus for m = 1 (infinite) and m = 2 (Sylvester).
/// Three-generator tuples go through frobenius::invariants.
ClosedForm closed_form(const Generators& gens);

struct MatrixRepEntry {
  std::int64_t p;
  std::int64_t q;
  std::int64_t value; // d1 d2 - p d1 - q d2

  bool positive() const noexcept { return value > 0; }
  bool operator==(const MatrixRepEntry&) const = default;
};

/// Row bound floor(d2 - d2/d1) of the sigma(p, q) grid.
std::int64_t matrix_rows(const Generators& gens);

/// All sigma(p, q) = d1 d2 - p d1 - q d2 for 1 <= p <= floor(d2 - d2/d1),
/// 1 <= q <= d1 - 1, row-major. The positive values are exactly the gaps of
/// the pair, each hit once. Requires m = 2 and d1 >= 3.
std::vector<MatrixRepEntry> matrix_representation(const Generators& gens);

} // namespace frob3
