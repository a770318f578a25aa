#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frob3/arith.hpp"
#include "frob3/core.hpp"
#include "frob3/series.hpp"

namespace frob3 {

/// Diagonal of the Johnson matrix: for each axis k the least v >= 2 such that
/// v * d_k is a non-negative combination of the other two generators.
struct DiagonalTriple {
  std::array<std::int64_t, 3> a{};

  std::int64_t operator[](Axis k) const noexcept { return a[index(k)]; }
  bool operator==(const DiagonalTriple&) const = default;
};

/// 3x3 matrix of minimal relations a_kk d_k = sum_{j != k} a_kj d_j.
struct JohnsonMatrix {
  std::array<std::array<std::int64_t, 3>, 3> a{};

  std::int64_t operator()(Axis row, Axis col) const noexcept {
    return a[index(row)][index(col)];
  }
  DiagonalTriple diagonal() const noexcept {
    return {{a[0][0], a[1][1], a[2][2]}};
  }
  bool operator==(const JohnsonMatrix&) const = default;
};

/// Largest b that can be the diagonal entry on axis k: d2 - 1 for the first
/// axis, d1 - 1 for the other two.
std::int64_t diagonal_bound(const Generators& gens, Axis k);

/// Coefficient of z^n in the Hilbert series (1 - z^L)/((1 - z^a)(1 - z^b)),
/// L = lcm(a, b), obtained by counting representations. Always 0 or 1.
std::int64_t pair_hilbert_coefficient(std::int64_t n, std::int64_t a, std::int64_t b);

/// 1 minus the coefficient of z^(b d_k) in the Hilbert series of the other two
/// generators: 0 exactly when b * d_k is representable by them.
int xi(const Generators& gens, Axis k, std::int64_t b);

/// Contour evaluation of the same quantity for real b, with the Hilbert series
/// sampled on |w| = r < 1. Agrees with xi() at integer b.
double xi_numeric(const Generators& gens, Axis k, double b,
                  const ContourOptions& options = {0.99, 4096});

/// (b, xi) for every integer b in [b_min, b_max]; the range must lie within
/// [1, diagonal_bound].
std::vector<std::pair<std::int64_t, int>>
xi_sweep(const Generators& gens, Axis k, std::int64_t b_min, std::int64_t b_max);

/// Least zero of xi on each axis, scanning b = 2, 3, ... up to diagonal_bound.
DiagonalTriple diagonal_via_xi(const Generators& gens);

/// Lowest exponent of psi on each axis divided by d_k.
DiagonalTriple diagonal_via_psi(const Generators& gens);

struct SymmetricPair {
  Axis first;
  Axis second;
};

/// The first pair (i, j), i < j, with a_ii d_i == a_jj d_j; pairs are checked
/// in the order (1,2), (1,3), (2,3).
std::optional<SymmetricPair> is_symmetric(const Generators& gens,
                                          const DiagonalTriple& diag);

/// <a, d> = sum a_kk d_k.
std::int64_t diagonal_pairing(const Generators& gens, const DiagonalTriple& diag);

/// Discriminant <a,d>^2 - 4 sum_{i<j} a_ii a_jj d_i d_j + 4 d1 d2 d3.
arith::int128 j_squared(const Generators& gens, const DiagonalTriple& diag);

/// Exact rational root (numerator / denominator, denominator > 0).
struct Root {
  std::int64_t numerator;
  std::int64_t denominator;

  bool integral() const noexcept { return numerator % denominator == 0; }
  std::int64_t value() const noexcept { return numerator / denominator; }
  bool operator==(const Root&) const = default;
};

/// Six off-diagonal candidate values, row-major positions (0,1),(0,2),(1,0),
/// (1,2),(2,0),(2,1).
using RootAssembly = std::array<Root, 6>;

struct AssemblyCheck {
  RootAssembly roots{};
  bool integral = false;
  bool nonnegative = false;
  bool relations = false;  // a_kk d_k = sum a_kj d_j on every row
  bool row_gcd = false;    // each row has gcd 1
  bool identities = false; // column sums and product identities

  bool passes() const noexcept {
    return integral && nonnegative && relations && row_gcd && identities;
  }
};

/// Both ways of reading the quadratic roots for the off-diagonal entries.
///
/// Each transposed pair (a_jl, a_lj) solves quadratics whose two roots are
/// {a_jl, a_lj d_j / d_l}; the actual entries satisfy
/// a_jl d_l + a_lj d_j = <a,d> - 2 a_kk d_k, so inside a pair one entry takes
/// the +J root and the other the -J root. `cyclic` puts +J on a12, a23, a31
/// and -J on the transposed entries; `anticyclic` is the reverse. `selected`
/// is the candidate that passes every check and `conjugate` the other one,
/// whose entries are a_lj d_j / d_l.
struct RootSelection {
  std::int64_t pairing = 0;
  std::int64_t j = 0;
  AssemblyCheck cyclic;
  AssemblyCheck anticyclic;
  AssemblyCheck uniform_plus;  // +J on all six entries
  AssemblyCheck uniform_minus; // -J on all six entries
  bool cyclic_selected = false;

  const AssemblyCheck& selected() const noexcept {
    return cyclic_selected ? cyclic : anticyclic;
  }
  const AssemblyCheck& conjugate() const noexcept {
    return cyclic_selected ? anticyclic : cyclic;
  }
};

/// Evaluates every candidate assembly without throwing on failed checks.
/// Throws not_perfect_square if J^2 is not a square.
RootSelection select_roots(const Generators& gens, const DiagonalTriple& diag);

/// Full Johnson matrix for a non-symmetric triple.
///
/// Throws symmetric_semigroup, not_perfect_square, root_selection_ambiguous
/// (both candidates pass) or no_valid_assembly (neither does).
JohnsonMatrix off_diagonal(const Generators& gens, const DiagonalTriple& diag);

/// Checks an integer matrix against every structural property of a Johnson
/// matrix for `gens` (relations, row gcd, identities).
AssemblyCheck check_matrix(const Generators& gens, const JohnsonMatrix& m);

} // namespace frob3
