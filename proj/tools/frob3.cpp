// frob3: Frobenius number, genus, Hilbert numerator and Johnson matrix of
// three-generator numerical semigroups.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "frob3/core.hpp"
#include "frob3/error.hpp"
#include "frob3/johnson.hpp"
#include "frob3/oracle.hpp"
#include "frob3/report.hpp"
#include "frob3/series.hpp"
#include "frob3/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

// Oracle tables beyond this many entries are skipped by `compute`.
constexpr std::int64_t max_oracle_bound = 100'000'000;

frob3::Limits limits_from_env() {
  frob3::Limits limits;
  if (const char* v = std::getenv("FROB3_MAX_PRODUCT")) {
    try {
      limits.max_product = std::stoll(v);
    } catch (const std::exception&) {
      std::cerr << "ignoring invalid FROB3_MAX_PRODUCT=" << v << '\n';
    }
  }
  return limits;
}

frob3::Generators parse_generators(const std::vector<std::int64_t>& raw, std::size_t want) {
  if (raw.size() != want)
    throw frob3::error(frob3::errc::invalid_length,
                       "expected " + std::to_string(want) + " generators, got " +
                           std::to_string(raw.size()));
  return frob3::Generators::validate(raw, limits_from_env());
}

void print_report(const frob3::Report& r, bool json) {
  if (json)
    std::cout << frob3::to_json(r).dump(2) << '\n';
  else
    std::cout << frob3::to_text(r);
}

bool oracle_affordable(const frob3::Generators& gens) {
  return frob3::oracle::default_bound(gens) <= max_oracle_bound;
}

std::string report_line(const std::string& line, std::size_t want) {
  std::istringstream in(line);
  std::vector<std::int64_t> raw;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      raw.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      return frob3::to_json(frob3::error_report(raw, "parse_error",
                                                "not an integer: " + token))
          .dump();
    }
  }
  try {
    const auto gens = parse_generators(raw, want);
    return frob3::to_json(frob3::triple_report(gens, false)).dump();
  } catch (const frob3::error& e) {
    return frob3::to_json(
               frob3::error_report(raw, std::string(frob3::to_string(e.code())), e.what()))
        .dump();
  }
}

int cmd_batch(const std::string& path, unsigned jobs) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << '\n';
    return exit_usage;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }

  std::vector<std::string> out(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) out[i] = report_line(lines[i], 3);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(lines.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& s : out) std::cout << s << '\n';
  return exit_ok;
}

int cmd_verify(const std::vector<std::int64_t>& raw, std::size_t random, std::int64_t max_d,
               std::uint64_t seed, bool inject_fault) {
  std::vector<frob3::Generators> tuples;
  if (!raw.empty()) tuples.push_back(parse_generators(raw, 3));
  if (random > 0) {
    auto more = frob3::random_triples(random, max_d, seed);
    tuples.insert(tuples.end(), more.begin(), more.end());
  }
  if (tuples.empty()) {
    std::cerr << "verify needs a triple or --random N\n";
    return exit_usage;
  }
  const frob3::VerifyOptions options{inject_fault};
  std::size_t checks = 0;
  for (const auto& gens : tuples) {
    for (const auto& c : frob3::verify_tuple(gens, options)) {
      ++checks;
      if (!c.passed) {
        std::cout << "FAIL " << gens.to_string() << ' ' << c.name << ": " << c.detail << '\n';
        return exit_verify_failed;
      }
    }
  }
  std::cout << "PASS " << tuples.size() << " tuple(s), " << checks << " checks\n";
  return exit_ok;
}

int cmd_xi(const frob3::Generators& gens, int k, std::int64_t b_min, std::int64_t b_max,
           const std::string& csv) {
  const auto axis = frob3::axis_from_number(k);
  if (b_max == 0) b_max = frob3::diagonal_bound(gens, axis);
  const auto rows = frob3::xi_sweep(gens, axis, b_min, b_max);
  std::ostringstream body;
  body << "b,xi\n";
  for (const auto& [b, v] : rows) body << b << ',' << v << '\n';
  if (csv.empty() || csv == "-") {
    std::cout << body.str();
    return exit_ok;
  }
  std::ofstream file(csv, std::ios::binary);
  if (!file) {
    std::cerr << "cannot write " << csv << '\n';
    return exit_usage;
  }
  file << body.str();
  return exit_ok;
}

int cmd_psi(const frob3::Generators& gens, int k, std::int64_t horizon, bool json) {
  const auto axis = frob3::axis_from_number(k);
  const auto series = horizon > 0 ? frob3::psi(gens, axis, horizon) : frob3::psi(gens, axis);
  if (json) {
    nlohmann::ordered_json j;
    j["input"] = std::vector<std::int64_t>(gens.values().begin(), gens.values().end());
    j["axis"] = k;
    j["horizon"] = series.base.horizon();
    j["leading_multiple"] = series.leading_multiple() ? nlohmann::ordered_json(*series.leading_multiple())
                                                      : nlohmann::ordered_json(nullptr);
    j["exponents"] = nlohmann::ordered_json::array();
    for (const auto& t : series.base.terms()) j["exponents"].push_back(t.exponent);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "exponent,multiple\n";
    for (const auto& t : series.base.terms())
      std::cout << t.exponent << ',' << t.exponent / gens[axis] << '\n';
  }
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius number, genus and Johnson matrix of numerical semigroups"};
  app.require_subcommand(1);

  std::vector<std::int64_t> raw;
  bool json = false;

  auto* compute = app.add_subcommand("compute", "invariants of a triple d1 d2 d3");
  compute->add_option("generators", raw, "d1 d2 d3")->required();
  compute->add_flag("--json", json, "print a JSON report");
  bool no_verify = false;
  compute->add_flag("--no-verify", no_verify, "skip the brute-force checks");

  auto* pair = app.add_subcommand("pair", "Sylvester closed forms for a pair d1 d2");
  pair->add_option("generators", raw, "d1 d2")->required();
  pair->add_flag("--json", json, "print a JSON report");
  bool with_matrix = false;
  pair->add_flag("--matrix", with_matrix, "dump the sigma(p, q) grid");

  int k = 3;
  std::int64_t b_min = 1, b_max = 0;
  std::string csv;
  auto* xi = app.add_subcommand("xi", "sweep of the representability indicator on one axis");
  xi->add_option("generators", raw, "d1 d2 d3")->required();
  xi->add_option("--k", k, "axis 1, 2 or 3");
  xi->add_option("--b-min", b_min, "first b (default 1)");
  xi->add_option("--b-max", b_max, "last b (default: the diagonal bound)");
  xi->add_option("--csv", csv, "output file (default stdout)");

  std::int64_t horizon = 0;
  auto* psi = app.add_subcommand("psi", "exponents of the auxiliary series on one axis");
  psi->add_option("generators", raw, "d1 d2 d3")->required();
  psi->add_option("--k", k, "axis 1, 2 or 3");
  psi->add_option("--horizon", horizon, "truncation degree (default: safe bound)");
  psi->add_flag("--json", json, "print JSON instead of CSV");

  std::size_t random = 0;
  std::int64_t max_d = 100;
  std::uint64_t seed = 1;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "check formulas against the brute-force oracle");
  verify->add_option("generators", raw, "d1 d2 d3");
  verify->add_option("--random", random, "number of random triples");
  verify->add_option("--max-d", max_d, "largest generator for random triples");
  verify->add_option("--seed", seed, "random seed");
  verify->add_flag("--inject-fault", inject_fault)->group("");

  std::string path;
  unsigned jobs = 1;
  auto* batch = app.add_subcommand("batch", "JSON lines for a file of triples");
  batch->add_option("file", path, "one triple per line, # comments")->required();
  batch->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*compute) {
      const auto gens = parse_generators(raw, 3);
      print_report(frob3::triple_report(gens, !no_verify && oracle_affordable(gens)), json);
      return exit_ok;
    }
    if (*pair) {
      const auto gens = parse_generators(raw, 2);
      print_report(frob3::pair_report(gens, with_matrix), json);
      return exit_ok;
    }
    if (*xi) return cmd_xi(parse_generators(raw, 3), k, b_min, b_max, csv);
    if (*psi) return cmd_psi(parse_generators(raw, 3), k, horizon, json);
    if (*verify) return cmd_verify(raw, random, max_d, seed, inject_fault);
    if (*batch) return cmd_batch(path, jobs);
  } catch (const frob3::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
