#include "frob3/report.hpp"

#include <sstream>

#include "frob3/arith.hpp"
#include "frob3/frobenius.hpp"

namespace frob3 {

using nlohmann::json;
using nlohmann::ordered_json;

Report triple_report(const Generators& gens, bool with_checks) {
  Report r;
  r.input.assign(gens.values().begin(), gens.values().end());
  const Invariants3 inv = invariants(gens);
  r.symmetric = inv.symmetric;
  r.frobenius = inv.frobenius;
  r.genus = inv.genus;
  r.j = inv.j;
  r.diagonal = inv.diagonal.a;
  if (inv.matrix) r.matrix = inv.matrix->a;
  r.numerator.assign(inv.numerator.terms().begin(), inv.numerator.terms().end());
  if (with_checks) r.checks = verify_tuple(gens);
  return r;
}

Report pair_report(const Generators& gens, bool with_matrix) {
  Report r;
  r.input.assign(gens.values().begin(), gens.values().end());
  const PairInvariants p = sylvester_pair(gens);
  r.frobenius = p.frobenius;
  r.genus = p.genus;
  r.numerator = {{0, 1}, {arith::mul(gens[0], gens[1]), -1}};
  if (with_matrix) r.matrix_representation = matrix_representation(gens);
  return r;
}

Report error_report(std::vector<std::int64_t> input, const std::string& code,
                    const std::string& message) {
  Report r;
  r.input = std::move(input);
  r.error = ReportError{code, message};
  return r;
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["input"] = r.input;
  if (r.error) {
    j["error"] = {{"code", r.error->code}, {"message", r.error->message}};
    return j;
  }
  if (r.symmetric) j["symmetric"] = *r.symmetric;
  if (r.frobenius) j["frobenius"] = *r.frobenius;
  if (r.genus) j["genus"] = *r.genus;
  if (r.j) j["j"] = *r.j;
  if (r.diagonal) j["diagonal"] = *r.diagonal;
  if (r.matrix) j["matrix"] = *r.matrix;
  j["numerator"] = ordered_json::array();
  for (const auto& t : r.numerator) j["numerator"].push_back({t.exponent, t.coefficient});
  if (!r.matrix_representation.empty()) {
    auto& grid = j["matrix_representation"] = ordered_json::array();
    for (const auto& e : r.matrix_representation)
      grid.push_back({{"p", e.p}, {"q", e.q}, {"value", e.value}, {"positive", e.positive()}});
  }
  if (!r.checks.empty()) {
    auto& checks = j["checks"] = ordered_json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.input = j.at("input").get<std::vector<std::int64_t>>();
  if (j.contains("error")) {
    r.error = ReportError{j["error"].at("code").get<std::string>(),
                          j["error"].at("message").get<std::string>()};
    return r;
  }
  if (j.contains("symmetric")) r.symmetric = j["symmetric"].get<bool>();
  if (j.contains("frobenius")) r.frobenius = j["frobenius"].get<std::int64_t>();
  if (j.contains("genus")) r.genus = j["genus"].get<std::int64_t>();
  if (j.contains("j")) r.j = j["j"].get<std::int64_t>();
  if (j.contains("diagonal")) r.diagonal = j["diagonal"].get<std::array<std::int64_t, 3>>();
  if (j.contains("matrix"))
    r.matrix = j["matrix"].get<std::array<std::array<std::int64_t, 3>, 3>>();
  for (const auto& t : j.at("numerator"))
    r.numerator.push_back({t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>()});
  if (j.contains("matrix_representation"))
    for (const auto& e : j["matrix_representation"])
      r.matrix_representation.push_back({e.at("p").get<std::int64_t>(),
                                         e.at("q").get<std::int64_t>(),
                                         e.at("value").get<std::int64_t>()});
  if (j.contains("checks"))
    for (const auto& c : j["checks"])
      r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                          c.at("detail").get<std::string>()});
  return r;
}

std::string polynomial_string(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    const std::int64_t c = t.coefficient;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (t.exponent == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << "z^" << t.exponent;
  }
  return out.str();
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "generators: ";
  for (std::size_t i = 0; i < r.input.size(); ++i) out << (i ? " " : "") << r.input[i];
  out << '\n';
  if (r.error) {
    out << "error: " << r.error->message << '\n';
    return out.str();
  }
  if (r.symmetric) out << "symmetric: " << (*r.symmetric ? "yes" : "no") << '\n';
  if (r.frobenius) out << "frobenius number: " << *r.frobenius << '\n';
  if (r.genus) out << "genus: " << *r.genus << '\n';
  if (r.j) out << "J: " << *r.j << '\n';
  if (r.diagonal)
    out << "diagonal: " << (*r.diagonal)[0] << ' ' << (*r.diagonal)[1] << ' '
        << (*r.diagonal)[2] << '\n';
  if (r.matrix) {
    out << "johnson matrix:\n";
    for (const auto& row : *r.matrix)
      out << "  " << row[0] << ' ' << row[1] << ' ' << row[2] << '\n';
  }
  out << "numerator: " << polynomial_string(r.numerator) << '\n';
  if (!r.matrix_representation.empty()) {
    out << "sigma(p, q), rows p, columns q (* marks gaps):\n";
    std::int64_t row = 0;
    for (const auto& e : r.matrix_representation) {
      if (e.p != row) {
        if (row != 0) out << '\n';
        out << ' ';
        row = e.p;
      }
      out << ' ' << e.value << (e.positive() ? "*" : "");
    }
    out << '\n';
  }
  for (const auto& c : r.checks)
    out << "check " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " (" << c.detail
        << ")\n";
  return out.str();
}

} // namespace frob3
