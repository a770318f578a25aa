#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "frob3/core.hpp"
#include "frob3/series.hpp"
#include "frob3/verify.hpp"

namespace frob3 {

struct ReportError {
  std::string code;
  std::string message;

  bool operator==(const ReportError&) const = default;
};

/// What the CLI prints for one tuple. Absent fields are omitted from JSON.
struct Report {
  std::vector<std::int64_t> input;
  std::optional<bool> symmetric;
  std::optional<std::int64_t> frobenius;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> j;
  std::optional<std::array<std::int64_t, 3>> diagonal;
  std::optional<std::array<std::array<std::int64_t, 3>, 3>> matrix;
  std::vector<Term> numerator;
  std::vector<MatrixRepEntry> matrix_representation;
  std::vector<CheckResult> checks;
  std::optional<ReportError> error;

  bool operator==(const Report&) const = default;
};

Report triple_report(const Generators& gens, bool with_checks = true);
Report pair_report(const Generators& gens, bool with_matrix = false);
Report error_report(std::vector<std::int64_t> input, const std::string& code,
                    const std::string& message);

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Multi-line human readable rendering.
std::string to_text(const Report& report);

/// "1 - z^8 - z^9 + ..." rendering of a polynomial.
std::string polynomial_string(const std::vector<Term>& terms);

} // namespace frob3
