#pragma once

#include <cstdint>
#include <optional>

#include "frob3/core.hpp"
#include "frob3/johnson.hpp"
#include "frob3/series.hpp"

namespace frob3 {

/// Headline invariants of a three-generator semigroup.
struct Invariants3 {
  std::int64_t frobenius = 0;
  std::int64_t genus = 0;
  std::optional<std::int64_t> j;
  /// Hilbert series numerator Q, H = Q / prod(1 - z^(d_k)).
  SparseSeries numerator;
  bool symmetric = false;
  std::optional<SymmetricPair> symmetric_pair;
  DiagonalTriple diagonal;
  std::optional<JohnsonMatrix> matrix;

  /// The closed-form genus (1 + <a,d> - sum d - a11 a22 a33)/2. For symmetric
  /// tuples `genus` comes from the series instead and this is recorded for
  /// comparison.
  std::int64_t genus_formula = 0;
  /// Symmetric tuples only: whether the six-term numerator built from J
  /// collapses to the two-binomial product.
  std::optional<bool> six_term_collapses;
};

/// sqrt of the discriminant <a,d>^2 - 4 sum a_ii a_jj d_i d_j + 4 d1 d2 d3.
/// Throws not_perfect_square.
std::int64_t j_invariant(const Generators& gens, const DiagonalTriple& diag);

/// 1 - sum z^(a_kk d_k) + z^((<a,d> - J)/2) + z^((<a,d> + J)/2), with
/// colliding exponents summed.
SparseSeries six_term_numerator(const Generators& gens, const DiagonalTriple& diag,
                                std::int64_t j);

/// (1 - z^(a_ii d_i))(1 - z^(a_kk d_k)) where a_ii d_i = a_jj d_j and k is the
/// remaining axis.
SparseSeries symmetric_numerator(const Generators& gens, const DiagonalTriple& diag,
                                 SymmetricPair pair);

Invariants3 invariants(const Generators& gens);

/// Q for any validated tuple: 1 for m = 1, 1 - z^(d1 d2) for m = 2, and
/// invariants().numerator for m = 3.
SparseSeries hilbert_numerator(const Generators& gens);

/// Expands numerator / prod(1 - z^(d_k)) up to horizon. The result is the
/// 0/1 series of the semigroup; anything else throws invariant_violation.
SparseSeries expand_hilbert(const SparseSeries& numerator, const Generators& gens,
                            std::int64_t horizon);

/// Hilbert series of the semigroup up to horizon (horizon >= 0).
SparseSeries hilbert_series(const Generators& gens, std::int64_t horizon);

/// Gap generating function 1/(1 - z) - H up to horizon; horizon must be at
/// least the Frobenius number (so m = 1 always fails).
SparseSeries gap_generating_function(const Generators& gens, std::int64_t horizon);

/// Frobenius number from the closed forms (m = 2) or invariants (m = 3).
Extended frobenius_number(const Generators& gens);

} // namespace frob3
