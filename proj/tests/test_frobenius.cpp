#include "doctest.h"

#include <optional>
#include <variant>

#include "frob3/error.hpp"
#include "frob3/frobenius.hpp"
#include "frob3/oracle.hpp"
#include "frob3/verify.hpp"
#include "test_support.hpp"

using namespace frob3;
using frob3::testing::naive_gaps;

namespace {

SparseSeries poly(std::vector<Term> terms) { return SparseSeries::from_terms(std::move(terms)); }

// Oracle Hilbert coefficients times prod (1 - z^d), truncated at `degree`.
std::vector<std::int64_t> oracle_numerator(const Generators& g, std::int64_t degree) {
  auto c = oracle::hilbert_bruteforce(g, degree);
  for (std::int64_t d : g.values())
    for (std::int64_t n = degree; n >= d; --n) c[n] -= c[n - d];
  return c;
}

std::vector<std::int64_t> dense(const SparseSeries& s, std::int64_t degree) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(degree + 1), 0);
  for (const auto& t : s.terms()) out[t.exponent] = t.coefficient;
  return out;
}

} // namespace

TEST_CASE("invariants of (23,29,44)") {
  const auto g = Generators::validate({23, 29, 44});
  const auto gaps = naive_gaps({23, 29, 44}, 667);
  REQUIRE(gaps.back() == 239);
  REQUIRE(gaps.size() == 122);

  const auto inv = invariants(g);
  CHECK(inv.frobenius == 239);
  CHECK(inv.genus == 122);
  CHECK(inv.j == 86);
  CHECK_FALSE(inv.symmetric);
  CHECK(inv.diagonal == DiagonalTriple{{7, 7, 5}});
  CHECK(inv.genus_formula == 122);
  CHECK_FALSE(inv.six_term_collapses);
  CHECK(inv.numerator ==
        poly({{0, 1}, {161, -1}, {203, -1}, {220, -1}, {249, 1}, {335, 1}}));
  CHECK(dense(inv.numerator, 335) == oracle_numerator(g, 335));
  REQUIRE(inv.matrix);
  CHECK(*inv.matrix == JohnsonMatrix{{{{7, 1, 3}, {5, 7, 2}, {2, 6, 5}}}});
  CHECK(j_invariant(g, inv.diagonal) == 86);
}

TEST_CASE("invariants of symmetric (4,5,6)") {
  const auto g = Generators::validate({4, 5, 6});
  CHECK(naive_gaps({4, 5, 6}, 30) == std::vector<std::int64_t>{1, 2, 3, 7});
  const auto inv = invariants(g);
  CHECK(inv.symmetric);
  REQUIRE(inv.symmetric_pair);
  CHECK(inv.symmetric_pair->first == Axis::first);
  CHECK(inv.symmetric_pair->second == Axis::third);
  CHECK(inv.frobenius == 7);
  CHECK(inv.genus == 4);
  CHECK(inv.j == 10);
  CHECK(inv.numerator == poly({{0, 1}, {10, -1}, {12, -1}, {22, 1}}));
  CHECK_FALSE(inv.matrix);
  CHECK(inv.six_term_collapses == true);
  CHECK(inv.genus_formula == 4);
}

TEST_CASE("invariants of (3,4,5)") {
  const auto inv = invariants(Generators::validate({3, 4, 5}));
  CHECK(inv.frobenius == 2);
  CHECK(inv.genus == 2);
  CHECK(inv.j == 1);
  CHECK(naive_gaps({3, 4, 5}, 12) == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("j_invariant rejects a non-square discriminant") {
  const auto g = Generators::validate({23, 29, 44});
  try {
    j_invariant(g, DiagonalTriple{{7, 7, 6}});
    FAIL("expected not_perfect_square");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_perfect_square);
  }
}

TEST_CASE("hilbert_numerator for one and two generators") {
  CHECK(hilbert_numerator(Generators::validate({7})) == poly({{0, 1}}));
  CHECK(hilbert_numerator(Generators::validate({3, 5})) == poly({{0, 1}, {15, -1}}));
}

TEST_CASE("hilbert_series and gap_generating_function examples") {
  const auto pair = Generators::validate({3, 5});
  const auto h = hilbert_series(pair, 10);
  CHECK(tau(h) == std::vector<std::int64_t>{0, 3, 5, 6, 8, 9, 10});
  CHECK(tau(gap_generating_function(pair, 7)) == std::vector<std::int64_t>{1, 2, 4, 7});
  CHECK(tau(gap_generating_function(pair, 20)) == std::vector<std::int64_t>{1, 2, 4, 7});
  try {
    gap_generating_function(pair, 6);
    FAIL("horizon below F");
  } catch (const error& e) {
    CHECK(e.code() == errc::horizon_too_small);
  }
  CHECK_THROWS_AS(gap_generating_function(Generators::validate({4}), 100), error);
  CHECK(tau(hilbert_series(Generators::validate({4}), 12)) == std::vector<std::int64_t>{0, 4, 8, 12});

  const auto t = Generators::validate({23, 29, 44});
  CHECK(tau(hilbert_series(t, 100)) ==
        std::vector<std::int64_t>{0, 23, 29, 44, 46, 52, 58, 67, 69, 73, 75, 81, 87, 88, 90, 92, 96, 98});
}

TEST_CASE("expand_hilbert rejects a numerator that is not a semigroup's") {
  try {
    expand_hilbert(poly({{0, 1}}), Generators::validate({3, 5}), 20);
    FAIL("1/((1-z^3)(1-z^5)) has coefficient 2 at 15");
  } catch (const error& e) {
    CHECK(e.code() == errc::invariant_violation);
  }
}

TEST_CASE("frobenius_number by arity") {
  CHECK(std::holds_alternative<Infinite>(frobenius_number(Generators::validate({5}))));
  CHECK(std::get<std::int64_t>(frobenius_number(Generators::validate({3, 5}))) == 7);
  CHECK(std::get<std::int64_t>(frobenius_number(Generators::validate({23, 29, 44}))) == 239);
}

TEST_CASE("formulas match the oracle on random triples") {
  for (const auto& g : random_triples(300, 120, 41)) {
    const auto inv = invariants(g);
    const auto gaps = oracle::gaps_bruteforce(g);
    REQUIRE(inv.frobenius == gaps.frobenius());
    REQUIRE(inv.genus == gaps.genus());

    const std::int64_t deg = *inv.numerator.degree();
    REQUIRE(dense(inv.numerator, deg) == oracle_numerator(g, deg));

    // Q vanishes to second order at z = 1.
    std::int64_t moment = 0;
    for (const auto& t : inv.numerator.terms()) moment += t.exponent * t.coefficient;
    REQUIRE(inv.numerator.sum_of_coefficients() == 0);
    REQUIRE(moment == 0);
    REQUIRE(deg - g.sum() == inv.frobenius);

    const std::int64_t horizon = inv.frobenius + 10;
    REQUIRE(hilbert_series(g, horizon) + gap_generating_function(g, horizon) ==
            SparseSeries::ones(horizon));
  }
}

TEST_CASE("non-symmetric numerators have the six-term sign pattern") {
  int seen = 0;
  for (const auto& g : random_triples(300, 120, 42)) {
    const auto inv = invariants(g);
    if (inv.symmetric) continue;
    ++seen;
    const auto terms = inv.numerator.terms();
    REQUIRE(terms.size() == 6);
    REQUIRE(terms[0] == Term{0, 1});
    for (int i = 1; i <= 3; ++i) REQUIRE(terms[i].coefficient == -1);
    for (int i = 4; i <= 5; ++i) REQUIRE(terms[i].coefficient == 1);
    REQUIRE(inv.genus_formula == inv.genus);
  }
  CHECK(seen > 200);
}

TEST_CASE("symmetric tuples: closed forms still hold and the six-term numerator collapses") {
  int seen = 0;
  for (std::int64_t d1 = 3; d1 <= 20; ++d1)
    for (std::int64_t d2 = d1 + 1; d2 <= 40; ++d2)
      for (std::int64_t d3 = d2 + 1; d3 <= 60; ++d3) {
        std::optional<Generators> maybe;
        try {
          maybe = Generators::validate({d1, d2, d3});
        } catch (const error&) {
          continue;
        }
        const Generators& g = *maybe;
        const auto inv = invariants(g);
        if (!inv.symmetric) continue;
        ++seen;
        const auto gaps = oracle::gaps_bruteforce(g);
        REQUIRE(inv.frobenius == gaps.frobenius());
        REQUIRE(inv.genus == gaps.genus());
        REQUIRE(inv.genus_formula == inv.genus);
        REQUIRE(inv.j);
        REQUIRE(inv.six_term_collapses == true);
        REQUIRE(six_term_numerator(g, inv.diagonal, *inv.j) == inv.numerator);
        const std::int64_t pairing = diagonal_pairing(g, inv.diagonal);
        REQUIRE((pairing + *inv.j) / 2 - g.sum() == inv.frobenius);
        // Symmetric: exactly half of [0, F] are gaps.
        REQUIRE(2 * inv.genus == inv.frobenius + 1);
      }
  CHECK(seen > 100);
}
