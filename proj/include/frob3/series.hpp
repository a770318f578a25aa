#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "frob3/core.hpp"

namespace frob3 {

struct Term {
  std::int64_t exponent;
  std::int64_t coefficient;

  bool operator==(const Term&) const = default;
};

/// Truncated formal power series with integer coefficients, stored sparsely.
///
/// Coefficients are known for exponents 0..horizon(); nothing beyond the
/// horizon is stored or implied. Polynomials carry the `unbounded` horizon.
/// Terms are sorted by exponent and never hold a zero coefficient.
class SparseSeries {
public:
  static constexpr std::int64_t unbounded = std::numeric_limits<std::int64_t>::max();

  /// The zero polynomial.
  SparseSeries() = default;

  /// Sorts, sums duplicate exponents and drops zeros. Throws horizon_too_small
  /// if an exponent lies beyond the horizon and range_error on a negative one.
  static SparseSeries from_terms(std::vector<Term> terms,
                                 std::int64_t horizon = unbounded);
  static SparseSeries zero(std::int64_t horizon = unbounded);
  static SparseSeries monomial(std::int64_t exponent, std::int64_t coefficient = 1,
                               std::int64_t horizon = unbounded);
  /// 1/(1 - z^step) truncated at horizon: all multiples of step.
  static SparseSeries geometric(std::int64_t step, std::int64_t horizon);
  /// 1/(1 - z) truncated at horizon.
  static SparseSeries ones(std::int64_t horizon) { return geometric(1, horizon); }

  std::int64_t horizon() const noexcept { return horizon_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::int64_t coefficient(std::int64_t exponent) const;
  std::optional<std::int64_t> lowest_exponent() const;
  /// Largest stored exponent; nullopt for the zero series.
  std::optional<std::int64_t> degree() const;
  /// All coefficients are 0 or 1.
  bool is_characteristic() const;

  SparseSeries truncated(std::int64_t horizon) const;
  /// Sum of the coefficients (value at z = 1 of the stored part).
  std::int64_t sum_of_coefficients() const;
  std::complex<double> evaluate(std::complex<double> z) const;

  friend SparseSeries operator+(const SparseSeries& a, const SparseSeries& b);
  friend SparseSeries operator-(const SparseSeries& a, const SparseSeries& b);
  SparseSeries operator-() const;
  bool operator==(const SparseSeries&) const = default;

private:
  std::vector<Term> terms_;
  std::int64_t horizon_ = unbounded;
};

/// Series whose coefficient is 1 exactly on the elements of `set`.
/// Every element must satisfy 0 <= s <= horizon.
SparseSeries tau_inverse(std::span<const std::int64_t> set, std::int64_t horizon);

/// The set enumerated by a 0/1 series. Throws not_characteristic otherwise.
std::vector<std::int64_t> tau(const SparseSeries& s);

/// Termwise product: coefficient n of the result is u_n * v_n. The result
/// horizon is the smaller of the two.
SparseSeries hadamard(const SparseSeries& u, const SparseSeries& v);

/// Sum of u_n v_n z^(2n); known up to twice the smaller horizon.
SparseSeries circ(const SparseSeries& u, const SparseSeries& v);

/// Left fold of hadamard over a non-empty list.
SparseSeries hadamard_multi(std::span<const SparseSeries> us);

/// Keeps the terms whose exponent is divisible by n (n >= 1). Equal to
/// hadamard(u, geometric(n)) and to the average of u over z * (n-th roots of
/// unity).
SparseSeries multisection(const SparseSeries& u, std::int64_t n);

/// u(z^k), horizon scaled by k.
SparseSeries substitute_power(const SparseSeries& u, std::int64_t k);

/// Intersection of the two sets enumerated by 0/1 series.
SparseSeries intersect_sets_series(const SparseSeries& a, const SparseSeries& b);

/// 0/1 series of the (not necessarily numerical) semigroup generated by a and
/// b, up to horizon.
SparseSeries pair_semigroup_series(std::int64_t a, std::int64_t b,
                                   std::int64_t horizon);

/// Floating point mean of u(z w^k) over the n-th roots of unity w^k.
std::complex<double> roots_of_unity_average(const SparseSeries& u, std::int64_t n,
                                            std::complex<double> z);

/// The auxiliary series of one axis k of a triple: multiples b * d_k (b >= 1)
/// that the two remaining generators can represent, each with coefficient 1.
struct PsiSeries {
  SparseSeries base;
  Axis axis;
  Generators gens;

  /// Smallest b with b * d_k in the series; the Johnson diagonal entry.
  std::optional<std::int64_t> leading_multiple() const;
  /// The b values in increasing order.
  std::vector<std::int64_t> multiples() const;
};

/// Horizon that provably contains the leading term of psi: d_k * min(d_j, d_l)
/// (v = min(d_j, d_l) always gives a relation) and at least d_j * d_l.
std::int64_t default_psi_horizon(const Generators& gens, Axis k);

/// Builds H_jl (x) 1/(1 - z^(d_k)) - 1 up to `horizon` from the 0/1 series of
/// the pair (d_j, d_l). Requires a validated triple and horizon >= d_j d_l.
PsiSeries psi(const Generators& gens, Axis k, std::int64_t horizon);
PsiSeries psi(const Generators& gens, Axis k);

/// Hilbert series of the pair semigroup <a, b> in closed rational form,
/// (1 - w^lcm(a,b)) / ((1 - w^a)(1 - w^b)), for |w| < 1.
std::complex<double> pair_hilbert_value(std::int64_t a, std::int64_t b,
                                        std::complex<double> w);

struct ContourOptions {
  double radius = 0.9;
  std::int64_t points = std::int64_t{1} << 14;
};

/// Trapezoid evaluation of the Hadamard integral of Psi_k at z: the pair
/// Hilbert series sampled on |w| = r against 1/(1 - (z/w)^(d_k)), minus 1.
/// Requires 0 <= |z| < r < 1; throws invalid_contour otherwise.
std::complex<double> psi_numeric(const Generators& gens, Axis k,
                                 std::complex<double> z,
                                 const ContourOptions& options = {});

} // namespace frob3
