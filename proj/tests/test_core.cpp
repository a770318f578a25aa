#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "frob3/core.hpp"
#include "frob3/error.hpp"
#include "frob3/oracle.hpp"
#include "test_support.hpp"

using namespace frob3;
using frob3::testing::naive_gaps;
using frob3::testing::naive_representable;

namespace {

errc validation_error(std::initializer_list<std::int64_t> raw, Limits limits = {}) {
  try {
    Generators::validate(raw, limits);
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a validation error");
  return errc::invariant_violation;
}

} // namespace

TEST_CASE("validate accepts minimal coprime tuples") {
  const auto g = Generators::validate({23, 29, 44});
  CHECK(g.size() == 3);
  CHECK(g[Axis::third] == 44);
  CHECK(g.sum() == 96);
  CHECK(g.to_string() == "(23,29,44)");

  // (3,4,5): no generator is a combination of the others, by exhaustion.
  const std::vector<std::int64_t> d{3, 4, 5};
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<std::int64_t> others;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (j != i) others.push_back(d[j]);
    CHECK_FALSE(naive_representable(d[i], others));
  }
  CHECK_NOTHROW(Generators::validate({3, 4, 5}));
}

TEST_CASE("validate rejects each broken rule") {
  CHECK(validation_error({4, 6, 8}) == errc::gcd_not_one);
  CHECK(validation_error({5, 4, 7}) == errc::not_strictly_increasing);
  CHECK(validation_error({5, 5, 7}) == errc::not_strictly_increasing);
  CHECK(validation_error({2, 3, 5}) == errc::multiplicity_too_small);
  CHECK(validation_error({1, 5}) == errc::multiplicity_too_small);
  CHECK(validation_error({1}) == errc::multiplicity_too_small);
  CHECK(validation_error({}) == errc::invalid_length);
  CHECK(validation_error({3, 4, 5, 7}) == errc::invalid_length);
  CHECK(validation_error({3, 6}) == errc::gcd_not_one);
  CHECK(validation_error({1000, 1001, 1003}, Limits{1'000'000}) == errc::overflow);

  try {
    Generators::validate({4, 5, 9});
    FAIL("(4,5,9) is not minimal");
  } catch (const error& e) {
    CHECK(e.code() == errc::non_minimal);
    CHECK(e.detail() == 3);
  }
  try {
    Generators::validate({4, 6, 8});
  } catch (const error& e) {
    CHECK(std::string(e.what()) == "gcd is 2, must be 1");
    CHECK(e.detail() == 2);
  }
  // 8 = 4 + 4 involves only the first generator.
  try {
    Generators::validate({3, 8, 10});
  } catch (const error& e) {
    CHECK(e.code() == errc::non_minimal);
  }
  try {
    Generators::validate({5, 7, 12});
  } catch (const error& e) {
    CHECK(e.detail() == 3);
  }
}

TEST_CASE("single generator has infinite Frobenius number and genus") {
  const auto g = Generators::validate({7});
  const ClosedForm cf = closed_form(g);
  CHECK(std::holds_alternative<Infinite>(cf.frobenius));
  CHECK(std::holds_alternative<Infinite>(cf.genus));
}

TEST_CASE("is_representable examples") {
  CHECK(is_representable(161, Generators::validate({29, 44})));
  CHECK(is_representable(0, Generators::validate({29, 44})));
  CHECK(is_representable(0, Generators::validate({3, 5})));
  CHECK_FALSE(naive_representable(7, {3, 5}));
  CHECK_FALSE(is_representable(7, Generators::validate({3, 5})));
  CHECK_THROWS_AS(is_representable(4, Generators::validate({3, 4, 5})), error);
  // Non-coprime pairs as they occur inside triples.
  CHECK(representable_by_pair(30, 6, 9));
  CHECK_FALSE(representable_by_pair(31, 6, 9));
  CHECK_FALSE(representable_by_pair(-3, 6, 9));
}

TEST_CASE("is_representable agrees with the gap set on every t <= d1 d2") {
  for (std::int64_t d1 = 2; d1 <= 14; ++d1)
    for (std::int64_t d2 = d1 + 1; d2 <= 30; ++d2) {
      if (std::gcd(d1, d2) != 1) continue;
      const auto g = Generators::validate({d1, d2});
      const auto gaps = naive_gaps({d1, d2}, d1 * d2);
      const std::set<std::int64_t> gap_set(gaps.begin(), gaps.end());
      for (std::int64_t t = 0; t <= d1 * d2; ++t)
        REQUIRE(is_representable(t, g) == (gap_set.count(t) == 0));
    }
}

TEST_CASE("sylvester_pair closed forms") {
  auto check = [](std::int64_t a, std::int64_t b, std::int64_t f, std::int64_t genus) {
    const auto p = sylvester_pair(Generators::validate({a, b}));
    CHECK(p.frobenius == f);
    CHECK(p.genus == genus);
  };
  check(3, 5, 7, 4);
  check(2, 3, 1, 1);
  check(23, 29, 615, 308);

  const auto cf = closed_form(Generators::validate({3, 5}));
  CHECK(std::get<std::int64_t>(cf.frobenius) == 7);
  CHECK(std::get<std::int64_t>(cf.genus) == 4);
  CHECK_THROWS_AS(closed_form(Generators::validate({3, 4, 5})), error);
}

TEST_CASE("sylvester_pair matches max and size of the brute-force gap set") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> pick(2, 200);
  int tested = 0;
  while (tested < 150) {
    std::int64_t a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    if (a == b || std::gcd(a, b) != 1) continue;
    const auto g = Generators::validate({a, b});
    const auto gaps = oracle::gaps_bruteforce(g);
    const auto p = sylvester_pair(g);
    REQUIRE(p.frobenius == gaps.frobenius());
    REQUIRE(p.genus == gaps.genus());
    ++tested;
  }
}

TEST_CASE("matrix_representation of (3,5)") {
  const auto g = Generators::validate({3, 5});
  const auto grid = matrix_representation(g);
  REQUIRE(grid.size() == 6); // 3 rows x 2 columns
  CHECK(matrix_rows(g) == 3);
  std::vector<std::int64_t> positives;
  for (const auto& e : grid)
    if (e.positive()) positives.push_back(e.value);
  CHECK(positives == std::vector<std::int64_t>{7, 2, 4, 1});
  std::sort(positives.begin(), positives.end());
  CHECK(positives == naive_gaps({3, 5}, 15));
  CHECK(grid.front().value == sylvester_pair(g).frobenius);
  // Negative entries stay in the grid.
  CHECK(grid[3].value == -1);
  CHECK_FALSE(grid[3].positive());
}

TEST_CASE("matrix_representation rejects degenerate pairs") {
  CHECK_THROWS_AS(matrix_representation(Generators::validate({2, 7})), error);
  try {
    matrix_representation(Generators::validate({2, 7}));
  } catch (const error& e) {
    CHECK(e.code() == errc::pair_too_small);
  }
}

TEST_CASE("matrix_representation positive values are the gaps, each exactly once") {
  auto check_pair = [](std::int64_t a, std::int64_t b) {
    const auto g = Generators::validate({a, b});
    const auto grid = matrix_representation(g);
    std::vector<std::int64_t> positives;
    for (const auto& e : grid)
      if (e.positive()) positives.push_back(e.value);
    std::sort(positives.begin(), positives.end());
    REQUIRE(std::adjacent_find(positives.begin(), positives.end()) == positives.end());
    REQUIRE(positives == oracle::gaps_bruteforce(g).elements);
    REQUIRE(grid.front().value == sylvester_pair(g).frobenius);
  };
  // (23,29): 308 positive entries, the genus.
  {
    const auto grid = matrix_representation(Generators::validate({23, 29}));
    CHECK(std::count_if(grid.begin(), grid.end(),
                        [](const MatrixRepEntry& e) { return e.positive(); }) ==
          static_cast<std::ptrdiff_t>(naive_gaps({23, 29}, 23 * 29).size()));
    CHECK(naive_gaps({23, 29}, 23 * 29).size() == 308);
  }
  for (std::int64_t a = 3; a <= 40; ++a)
    for (std::int64_t b = a + 1; a * b <= 3000; ++b)
      if (std::gcd(a, b) == 1) check_pair(a, b);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> pick(3, 1000);
  int tested = 0;
  while (tested < 40) {
    std::int64_t a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    if (a == b || std::gcd(a, b) != 1 || a * b > 1'000'000) continue;
    check_pair(a, b);
    ++tested;
  }
}

TEST_CASE("axis helpers") {
  CHECK(axis_from_number(1) == Axis::first);
  CHECK(axis_from_number(3) == Axis::third);
  CHECK_THROWS_AS(axis_from_number(4), error);
  CHECK_THROWS_AS(axis_from_number(0), error);
  const auto c = complement(Axis::third);
  CHECK(c[0] == Axis::first);
  CHECK(c[1] == Axis::second);
}
