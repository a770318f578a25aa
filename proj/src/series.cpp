#include "frob3/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "frob3/arith.hpp"
#include "frob3/error.hpp"

namespace frob3 {

namespace {

void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = terms[i++];
    while (i < terms.size() && terms[i].exponent == t.exponent)
      t.coefficient = arith::add(t.coefficient, terms[i++].coefficient);
    if (t.coefficient != 0) terms[out++] = t;
  }
  terms.resize(out);
}

// Drop stored terms above the horizon; used after combining series with
// different horizons.
void clip(std::vector<Term>& terms, std::int64_t horizon) {
  auto it = std::upper_bound(
      terms.begin(), terms.end(), horizon,
      [](std::int64_t h, const Term& t) { return h < t.exponent; });
  terms.erase(it, terms.end());
}

std::int64_t scaled_horizon(std::int64_t horizon, std::int64_t k) {
  if (horizon == SparseSeries::unbounded) return horizon;
  return arith::mul(horizon, k);
}

template <typename Combine>
SparseSeries merge(const SparseSeries& a, const SparseSeries& b, Combine op) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto x = a.terms(), y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exponent < y[j].exponent)) {
      out.push_back({x[i].exponent, op(x[i].coefficient, 0)});
      ++i;
    } else if (i == x.size() || y[j].exponent < x[i].exponent) {
      out.push_back({y[j].exponent, op(0, y[j].coefficient)});
      ++j;
    } else {
      out.push_back({x[i].exponent, op(x[i].coefficient, y[j].coefficient)});
      ++i, ++j;
    }
  }
  const std::int64_t horizon = std::min(a.horizon(), b.horizon());
  clip(out, horizon);
  return SparseSeries::from_terms(std::move(out), horizon);
}

} // namespace

SparseSeries SparseSeries::from_terms(std::vector<Term> terms, std::int64_t horizon) {
  if (horizon < 0)
    throw error(errc::horizon_too_small, "horizon must be non-negative");
  for (const auto& t : terms) {
    if (t.exponent < 0)
      throw error(errc::range_error, "negative exponent " + std::to_string(t.exponent));
    if (t.exponent > horizon)
      throw error(errc::horizon_too_small,
                  "exponent " + std::to_string(t.exponent) +
                      " beyond horizon " + std::to_string(horizon));
  }
  normalize(terms);
  SparseSeries s;
  s.terms_ = std::move(terms);
  s.horizon_ = horizon;
  return s;
}

SparseSeries SparseSeries::zero(std::int64_t horizon) {
  return from_terms({}, horizon);
}

SparseSeries SparseSeries::monomial(std::int64_t exponent, std::int64_t coefficient,
                                    std::int64_t horizon) {
  return from_terms({{exponent, coefficient}}, horizon);
}

SparseSeries SparseSeries::geometric(std::int64_t step, std::int64_t horizon) {
  if (step < 1) throw error(errc::range_error, "geometric step must be positive");
  if (horizon == unbounded)
    throw error(errc::horizon_too_small, "an infinite series needs a finite horizon");
  if (horizon < 0) throw error(errc::horizon_too_small, "horizon must be non-negative");
  SparseSeries s;
  s.horizon_ = horizon;
  s.terms_.reserve(static_cast<std::size_t>(horizon / step + 1));
  for (std::int64_t e = 0; e <= horizon; e += step) s.terms_.push_back({e, 1});
  return s;
}

std::int64_t SparseSeries::coefficient(std::int64_t exponent) const {
  if (exponent > horizon_)
    throw error(errc::horizon_too_small,
                "coefficient " + std::to_string(exponent) + " beyond horizon " +
                    std::to_string(horizon_));
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, std::int64_t e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coefficient : 0;
}

std::optional<std::int64_t> SparseSeries::lowest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

std::optional<std::int64_t> SparseSeries::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exponent;
}

bool SparseSeries::is_characteristic() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coefficient == 1; });
}

SparseSeries SparseSeries::truncated(std::int64_t horizon) const {
  if (horizon > horizon_)
    throw error(errc::horizon_too_small,
                "cannot extend horizon " + std::to_string(horizon_) + " to " +
                    std::to_string(horizon));
  SparseSeries s = *this;
  clip(s.terms_, horizon);
  s.horizon_ = horizon;
  return s;
}

std::int64_t SparseSeries::sum_of_coefficients() const {
  std::int64_t total = 0;
  for (const auto& t : terms_) total = arith::add(total, t.coefficient);
  return total;
}

std::complex<double> SparseSeries::evaluate(std::complex<double> z) const {
  std::complex<double> total{0.0, 0.0};
  for (const auto& t : terms_)
    total += static_cast<double>(t.coefficient) *
             std::pow(z, static_cast<double>(t.exponent));
  return total;
}

SparseSeries operator+(const SparseSeries& a, const SparseSeries& b) {
  return merge(a, b, [](std::int64_t x, std::int64_t y) { return arith::add(x, y); });
}

SparseSeries operator-(const SparseSeries& a, const SparseSeries& b) {
  return merge(a, b, [](std::int64_t x, std::int64_t y) { return arith::sub(x, y); });
}

SparseSeries SparseSeries::operator-() const {
  SparseSeries s = *this;
  for (auto& t : s.terms_) t.coefficient = arith::sub(0, t.coefficient);
  return s;
}

SparseSeries tau_inverse(std::span<const std::int64_t> set, std::int64_t horizon) {
  std::vector<Term> terms;
  terms.reserve(set.size());
  for (auto s : set) terms.push_back({s, 1});
  auto result = SparseSeries::from_terms(std::move(terms), horizon);
  if (!result.is_characteristic())
    throw error(errc::range_error, "set contains repeated elements");
  return result;
}

std::vector<std::int64_t> tau(const SparseSeries& s) {
  if (!s.is_characteristic())
    throw error(errc::not_characteristic, "series has a coefficient outside {0, 1}");
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (const auto& t : s.terms()) out.push_back(t.exponent);
  return out;
}

SparseSeries hadamard(const SparseSeries& u, const SparseSeries& v) {
  std::vector<Term> out;
  auto x = u.terms(), y = v.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].exponent < y[j].exponent) {
      ++i;
    } else if (y[j].exponent < x[i].exponent) {
      ++j;
    } else {
      out.push_back({x[i].exponent, arith::mul(x[i].coefficient, y[j].coefficient)});
      ++i, ++j;
    }
  }
  const std::int64_t horizon = std::min(u.horizon(), v.horizon());
  clip(out, horizon);
  return SparseSeries::from_terms(std::move(out), horizon);
}

SparseSeries circ(const SparseSeries& u, const SparseSeries& v) {
  return substitute_power(hadamard(u, v), 2);
}

SparseSeries hadamard_multi(std::span<const SparseSeries> us) {
  if (us.empty()) throw error(errc::range_error, "hadamard_multi needs an operand");
  SparseSeries acc = us.front();
  for (std::size_t i = 1; i < us.size(); ++i) acc = hadamard(acc, us[i]);
  return acc;
}

SparseSeries multisection(const SparseSeries& u, std::int64_t n) {
  if (n < 1) throw error(errc::range_error, "multisection order must be positive");
  std::vector<Term> out;
  for (const auto& t : u.terms())
    if (t.exponent % n == 0) out.push_back(t);
  return SparseSeries::from_terms(std::move(out), u.horizon());
}

SparseSeries substitute_power(const SparseSeries& u, std::int64_t k) {
  if (k < 1) throw error(errc::range_error, "power substitution needs k >= 1");
  std::vector<Term> out;
  out.reserve(u.size());
  for (const auto& t : u.terms()) out.push_back({arith::mul(t.exponent, k), t.coefficient});
  return SparseSeries::from_terms(std::move(out), scaled_horizon(u.horizon(), k));
}

SparseSeries intersect_sets_series(const SparseSeries& a, const SparseSeries& b) {
  if (!a.is_characteristic() || !b.is_characteristic())
    throw error(errc::not_characteristic,
                "set intersection needs series with coefficients in {0, 1}");
  return hadamard(a, b);
}

SparseSeries pair_semigroup_series(std::int64_t a, std::int64_t b, std::int64_t horizon) {
  if (a < 1 || b < 1) throw error(errc::range_error, "generators must be positive");
  if (horizon < 0 || horizon == SparseSeries::unbounded)
    throw error(errc::horizon_too_small, "pair series needs a finite horizon");
  std::vector<char> member(static_cast<std::size_t>(horizon) + 1, 0);
  member[0] = 1;
  for (std::int64_t n = 1; n <= horizon; ++n)
    member[n] = (n >= a && member[n - a]) || (n >= b && member[n - b]);
  std::vector<Term> terms;
  for (std::int64_t n = 0; n <= horizon; ++n)
    if (member[n]) terms.push_back({n, 1});
  return SparseSeries::from_terms(std::move(terms), horizon);
}

std::complex<double> roots_of_unity_average(const SparseSeries& u, std::int64_t n,
                                            std::complex<double> z) {
  if (n < 1) throw error(errc::range_error, "root order must be positive");
  std::complex<double> total{0.0, 0.0};
  for (std::int64_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n);
    total += u.evaluate(z * std::polar(1.0, angle));
  }
  return total / static_cast<double>(n);
}

std::optional<std::int64_t> PsiSeries::leading_multiple() const {
  auto e = base.lowest_exponent();
  if (!e) return std::nullopt;
  return *e / gens[axis];
}

std::vector<std::int64_t> PsiSeries::multiples() const {
  std::vector<std::int64_t> out;
  out.reserve(base.size());
  for (const auto& t : base.terms()) out.push_back(t.exponent / gens[axis]);
  return out;
}

std::int64_t default_psi_horizon(const Generators& gens, Axis k) {
  const auto [j, l] = complement(k);
  return std::max(arith::mul(gens[j], gens[l]),
                  arith::mul(gens[k], std::min(gens[j], gens[l])));
}

PsiSeries psi(const Generators& gens, Axis k, std::int64_t horizon) {
  if (gens.size() != 3)
    throw error(errc::invalid_length, "psi needs three generators");
  const auto [j, l] = complement(k);
  if (horizon < arith::mul(gens[j], gens[l]))
    throw error(errc::horizon_too_small,
                "psi horizon " + std::to_string(horizon) + " below d_j d_l = " +
                    std::to_string(gens[j] * gens[l]));
  const SparseSeries pair = pair_semigroup_series(gens[j], gens[l], horizon);
  SparseSeries base = hadamard(pair, SparseSeries::geometric(gens[k], horizon)) -
                      SparseSeries::monomial(0, 1, horizon);
  return {std::move(base), k, gens};
}

PsiSeries psi(const Generators& gens, Axis k) {
  return psi(gens, k, default_psi_horizon(gens, k));
}

std::complex<double> pair_hilbert_value(std::int64_t a, std::int64_t b,
                                        std::complex<double> w) {
  const double lcm = static_cast<double>(std::lcm(a, b));
  return (1.0 - std::pow(w, lcm)) /
         ((1.0 - std::pow(w, static_cast<double>(a))) *
          (1.0 - std::pow(w, static_cast<double>(b))));
}

std::complex<double> psi_numeric(const Generators& gens, Axis k, std::complex<double> z,
                                 const ContourOptions& options) {
  if (gens.size() != 3)
    throw error(errc::invalid_length, "psi needs three generators");
  const double r = options.radius;
  if (!(r > 0.0 && r < 1.0) || !(std::abs(z) < r))
    throw error(errc::invalid_contour, "contour needs |z| < r < 1");
  if (options.points < 1)
    throw error(errc::invalid_contour, "contour needs at least one point");
  const auto [j, l] = complement(k);
  const double dk = static_cast<double>(gens[k]);
  const auto m = options.points;

  std::complex<double> total{0.0, 0.0};
  for (std::int64_t i = 0; i < m; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) /
                     static_cast<double>(m);
    const auto w = std::polar(r, t);
    const auto ratio = z / w;
    total += pair_hilbert_value(gens[j], gens[l], w) / (1.0 - std::pow(ratio, dk));
  }
  return total / static_cast<double>(m) - 1.0;
}

} // namespace frob3
