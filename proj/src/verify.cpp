#include "frob3/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "frob3/error.hpp"
#include "frob3/frobenius.hpp"
#include "frob3/johnson.hpp"
#include "frob3/oracle.hpp"

namespace frob3 {

namespace {

std::string diag_string(const DiagonalTriple& d) {
  std::ostringstream out;
  out << '(' << d.a[0] << ',' << d.a[1] << ',' << d.a[2] << ')';
  return out.str();
}

CheckResult compare(std::string name, std::int64_t formula, std::int64_t oracle) {
  return {std::move(name), formula == oracle,
          "formula " + std::to_string(formula) + ", oracle " + std::to_string(oracle)};
}

} // namespace

std::vector<CheckResult> verify_tuple(const Generators& gens, const VerifyOptions& options) {
  if (gens.size() != 3)
    throw error(errc::invalid_length, "verification needs three generators");
  std::vector<CheckResult> out;
  const Invariants3 inv = invariants(gens);
  const GapSet gaps = oracle::gaps_bruteforce(gens);

  const std::int64_t f = inv.frobenius + (options.inject_fault ? 1 : 0);
  out.push_back(compare("frobenius", f, gaps.frobenius()));
  out.push_back(compare("genus", inv.genus, gaps.genus()));

  // Q == H_oracle * prod(1 - z^d) truncated at deg Q.
  {
    const std::int64_t deg = *inv.numerator.degree();
    auto c = oracle::hilbert_bruteforce(gens, deg);
    for (auto d : gens.values())
      for (std::int64_t n = deg; n >= d; --n) c[n] -= c[n - d];
    bool same = true;
    for (std::int64_t n = 0; n <= deg; ++n)
      if (c[n] != inv.numerator.coefficient(n)) same = false;
    out.push_back({"numerator", same, "deg Q = " + std::to_string(deg)});
  }

  {
    const auto direct = oracle::johnson_direct(gens);
    const auto via_xi = diagonal_via_xi(gens);
    const auto via_psi = diagonal_via_psi(gens);
    out.push_back({"diagonal", direct == via_xi && direct == via_psi,
                   "direct " + diag_string(direct) + ", xi " + diag_string(via_xi) +
                       ", psi " + diag_string(via_psi)});
  }

  if (!inv.symmetric) {
    const RootSelection sel = select_roots(gens, inv.diagonal);
    const bool ok = sel.selected().passes() && !sel.conjugate().passes();
    out.push_back({"root_selection", ok,
                   std::string(sel.cyclic_selected ? "cyclic" : "anticyclic") +
                       " assembly selected, conjugate " +
                       (sel.conjugate().passes() ? "also passes" : "fails")});
  }

  {
    const std::int64_t horizon = inv.frobenius + 10;
    const SparseSeries sum =
        hilbert_series(gens, horizon) + gap_generating_function(gens, horizon);
    out.push_back({"hilbert_plus_gaps", sum == SparseSeries::ones(horizon),
                   "T = " + std::to_string(horizon)});
  }

  {
    const std::int64_t a33 = inv.diagonal.a[2];
    const oracle::RepresentabilityTable pair({gens[0], gens[1]}, a33 * gens[2]);
    bool ok = true;
    for (std::int64_t j = 1; j <= a33; ++j)
      if (pair.contains(j * gens[2]) != (j == a33)) ok = false;
    out.push_back({"multiples_of_d3", ok,
                   "j * d3 is a gap of (d1, d2) exactly for j < a33 = " +
                       std::to_string(inv.diagonal.a[2])});
  }
  return out;
}

std::vector<Generators> random_triples(std::size_t count, std::int64_t max_d,
                                       std::uint64_t seed) {
  if (max_d < 5)
    throw error(errc::range_error, "max_d must be at least 5 to admit a triple");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(3, max_d);
  std::vector<Generators> out;
  out.reserve(count);
  while (out.size() < count) {
    std::array<std::int64_t, 3> d{pick(rng), pick(rng), pick(rng)};
    std::sort(d.begin(), d.end());
    try {
      out.push_back(Generators::validate(d));
    } catch (const error&) {
    }
  }
  return out;
}

} // namespace frob3
