#include "doctest.h"

#include "frob3/report.hpp"

using namespace frob3;

TEST_CASE("triple report fields") {
  const auto r = triple_report(Generators::validate({23, 29, 44}));
  CHECK(r.input == std::vector<std::int64_t>{23, 29, 44});
  CHECK(r.symmetric == false);
  CHECK(r.frobenius == 239);
  CHECK(r.genus == 122);
  CHECK(r.j == 86);
  CHECK(r.diagonal == std::array<std::int64_t, 3>{7, 7, 5});
  REQUIRE(r.matrix);
  CHECK((*r.matrix)[2] == std::array<std::int64_t, 3>{2, 6, 5});
  CHECK_FALSE(r.checks.empty());
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
  CHECK(polynomial_string(r.numerator) ==
        "1 - z^161 - z^203 - z^220 + z^249 + z^335");
}

TEST_CASE("json round trip") {
  for (const auto& r : {triple_report(Generators::validate({23, 29, 44})),
                        triple_report(Generators::validate({4, 5, 6}), false),
                        pair_report(Generators::validate({3, 5}), true),
                        error_report({4, 6, 8}, "gcd_not_one", "gcd is 2, must be 1")}) {
    const auto j = to_json(r);
    CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
  }
}

TEST_CASE("json layout is deterministic") {
  const auto a = to_json(triple_report(Generators::validate({4, 5, 6}), false)).dump();
  const auto b = to_json(triple_report(Generators::validate({4, 5, 6}), false)).dump();
  CHECK(a == b);
  CHECK(a ==
        R"({"input":[4,5,6],"symmetric":true,"frobenius":7,"genus":4,"j":10,"diagonal":[3,2,2],"numerator":[[0,1],[10,-1],[12,-1],[22,1]]})");
}

TEST_CASE("pair report with the sigma grid") {
  const auto r = pair_report(Generators::validate({3, 5}), true);
  CHECK(r.frobenius == 7);
  CHECK(r.genus == 4);
  REQUIRE(r.matrix_representation.size() == 6);
  CHECK(r.matrix_representation[0] == MatrixRepEntry{1, 1, 7});
  const auto text = to_text(r);
  CHECK(text.find("7*") != std::string::npos);
}

TEST_CASE("error report") {
  const auto r = error_report({4, 6, 8}, "gcd_not_one", "gcd is 2, must be 1");
  const auto j = to_json(r);
  CHECK(j["error"]["code"] == "gcd_not_one");
  CHECK_FALSE(j.contains("frobenius"));
  CHECK(to_text(r).find("error: gcd is 2, must be 1") != std::string::npos);
}

TEST_CASE("polynomial_string") {
  CHECK(polynomial_string({}) == "0");
  CHECK(polynomial_string({{0, 1}, {15, -1}}) == "1 - z^15");
  CHECK(polynomial_string({{2, -3}, {4, 2}}) == "-3*z^2 + 2*z^4");
}
