#include "frob3/frobenius.hpp"

#include <vector>

#include "frob3/arith.hpp"
#include "frob3/error.hpp"

namespace frob3 {

std::int64_t j_invariant(const Generators& gens, const DiagonalTriple& diag) {
  const auto j = arith::exact_sqrt(j_squared(gens, diag));
  if (!j)
    throw error(errc::not_perfect_square,
                "J^2 is not a perfect square for " + gens.to_string());
  return *j;
}

SparseSeries six_term_numerator(const Generators& gens, const DiagonalTriple& diag,
                                std::int64_t j) {
  const std::int64_t ad = diagonal_pairing(gens, diag);
  if ((ad - j) % 2 != 0)
    throw error(errc::invariant_violation, "<a,d> and J differ in parity");
  std::vector<Term> terms{{0, 1}, {(ad - j) / 2, 1}, {arith::add(ad, j) / 2, 1}};
  for (Axis k : all_axes) terms.push_back({arith::mul(diag[k], gens[k]), -1});
  return SparseSeries::from_terms(std::move(terms));
}

SparseSeries symmetric_numerator(const Generators& gens, const DiagonalTriple& diag,
                                 SymmetricPair pair) {
  const auto other = static_cast<Axis>(3 - index(pair.first) - index(pair.second));
  const std::int64_t x = arith::mul(diag[pair.first], gens[pair.first]);
  const std::int64_t y = arith::mul(diag[other], gens[other]);
  return SparseSeries::from_terms({{0, 1}, {x, -1}, {y, -1}, {arith::add(x, y), 1}});
}

Invariants3 invariants(const Generators& gens) {
  if (gens.size() != 3)
    throw error(errc::invalid_length, "invariants needs three generators");
  Invariants3 inv;
  inv.diagonal = diagonal_via_xi(gens);
  const auto& diag = inv.diagonal;
  const std::int64_t ad = diagonal_pairing(gens, diag);
  const std::int64_t sum_d = gens.sum();
  const std::int64_t j = j_invariant(gens, diag);
  inv.j = j;

  const std::int64_t diag_product = arith::mul(arith::mul(diag.a[0], diag.a[1]), diag.a[2]);
  const std::int64_t twice_genus = arith::sub(arith::sub(arith::add(1, ad), sum_d), diag_product);
  if (twice_genus % 2 != 0)
    throw error(errc::invariant_violation, "genus formula is not an integer");
  inv.genus_formula = twice_genus / 2;

  inv.symmetric_pair = is_symmetric(gens, diag);
  inv.symmetric = inv.symmetric_pair.has_value();
  if (!inv.symmetric) {
    inv.numerator = six_term_numerator(gens, diag, j);
    inv.frobenius = arith::sub(arith::add(ad, j) / 2, sum_d);
    inv.genus = inv.genus_formula;
    inv.matrix = off_diagonal(gens, diag);
    return inv;
  }

  inv.numerator = symmetric_numerator(gens, diag, *inv.symmetric_pair);
  inv.six_term_collapses = six_term_numerator(gens, diag, j) == inv.numerator;
  inv.frobenius = arith::sub(*inv.numerator.degree(), sum_d);
  // Genus as the number of gaps: coefficients of 1/(1-z) - H up to F.
  const SparseSeries h = expand_hilbert(inv.numerator, gens, inv.frobenius);
  inv.genus = inv.frobenius + 1 - h.sum_of_coefficients();
  return inv;
}

SparseSeries hilbert_numerator(const Generators& gens) {
  switch (gens.size()) {
  case 1: return SparseSeries::monomial(0);
  case 2: return SparseSeries::from_terms({{0, 1}, {arith::mul(gens[0], gens[1]), -1}});
  default: return invariants(gens).numerator;
  }
}

SparseSeries expand_hilbert(const SparseSeries& numerator, const Generators& gens,
                            std::int64_t horizon) {
  if (horizon < 0 || horizon == SparseSeries::unbounded)
    throw error(errc::horizon_too_small, "Hilbert series needs a finite horizon >= 0");
  std::vector<std::int64_t> c(static_cast<std::size_t>(horizon) + 1, 0);
  for (const auto& t : numerator.terms())
    if (t.exponent <= horizon) c[t.exponent] = t.coefficient;
  // Divide by (1 - z^d): running sum with stride d.
  for (auto d : gens.values())
    for (std::int64_t n = d; n <= horizon; ++n) c[n] = arith::add(c[n], c[n - d]);

  std::vector<Term> terms;
  for (std::int64_t n = 0; n <= horizon; ++n) {
    if (c[n] != 0 && c[n] != 1)
      throw error(errc::invariant_violation,
                  "Hilbert coefficient " + std::to_string(c[n]) + " at " +
                      std::to_string(n) + " for " + gens.to_string());
    if (c[n] == 1) terms.push_back({n, 1});
  }
  return SparseSeries::from_terms(std::move(terms), horizon);
}

SparseSeries hilbert_series(const Generators& gens, std::int64_t horizon) {
  return expand_hilbert(hilbert_numerator(gens), gens, horizon);
}

Extended frobenius_number(const Generators& gens) {
  if (gens.size() == 3) return invariants(gens).frobenius;
  return closed_form(gens).frobenius;
}

SparseSeries gap_generating_function(const Generators& gens, std::int64_t horizon) {
  const Extended f = frobenius_number(gens);
  if (std::holds_alternative<Infinite>(f))
    throw error(errc::horizon_too_small,
                "a single generator has infinitely many gaps");
  if (horizon < std::get<std::int64_t>(f))
    throw error(errc::horizon_too_small,
                "horizon " + std::to_string(horizon) + " below the Frobenius number " +
                    std::to_string(std::get<std::int64_t>(f)));
  return SparseSeries::ones(horizon) - hilbert_series(gens, horizon);
}

} // namespace frob3
