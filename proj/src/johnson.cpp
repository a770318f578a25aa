#include "frob3/johnson.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "frob3/arith.hpp"
#include "frob3/error.hpp"

namespace frob3 {

namespace {

using arith::int128;

void require_triple(const Generators& gens) {
  if (gens.size() != 3)
    throw error(errc::invalid_length, "operation needs three generators");
}

// Row-major slots of the off-diagonal entries.
constexpr std::array<std::pair<int, int>, 6> slots{
    {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};

// a12, a23, a31 form the cyclic class.
constexpr bool is_cyclic(int row, int col) { return (col - row + 3) % 3 == 1; }

JohnsonMatrix to_matrix(const DiagonalTriple& diag, const RootAssembly& roots) {
  JohnsonMatrix m;
  for (int k = 0; k < 3; ++k) m.a[k][k] = diag.a[k];
  for (std::size_t s = 0; s < slots.size(); ++s)
    m.a[slots[s].first][slots[s].second] = roots[s].value();
  return m;
}

AssemblyCheck check_assembly(const Generators& gens, const DiagonalTriple& diag,
                             const RootAssembly& roots) {
  AssemblyCheck c;
  c.roots = roots;
  c.integral = std::all_of(roots.begin(), roots.end(),
                           [](const Root& r) { return r.integral(); });
  if (!c.integral) return c;
  const AssemblyCheck full = check_matrix(gens, to_matrix(diag, roots));
  c.nonnegative = full.nonnegative;
  c.relations = full.relations;
  c.row_gcd = full.row_gcd;
  c.identities = full.identities;
  return c;
}

} // namespace

std::int64_t diagonal_bound(const Generators& gens, Axis k) {
  require_triple(gens);
  return k == Axis::first ? gens[1] - 1 : gens[0] - 1;
}

std::int64_t pair_hilbert_coefficient(std::int64_t n, std::int64_t a, std::int64_t b) {
  const std::int64_t lcm = arith::mul(a / std::gcd(a, b), b);
  return arith::count_representations(n, a, b) -
         arith::count_representations(n - lcm, a, b);
}

int xi(const Generators& gens, Axis k, std::int64_t b) {
  require_triple(gens);
  if (b < 1) throw error(errc::range_error, "xi needs b >= 1");
  const auto [j, l] = complement(k);
  const std::int64_t c = pair_hilbert_coefficient(arith::mul(b, gens[k]), gens[j], gens[l]);
  if (c != 0 && c != 1)
    throw error(errc::invariant_violation, "pair Hilbert coefficient outside {0, 1}");
  return static_cast<int>(1 - c);
}

double xi_numeric(const Generators& gens, Axis k, double b,
                  const ContourOptions& options) {
  require_triple(gens);
  const double r = options.radius;
  if (!(r > 0.0 && r < 1.0))
    throw error(errc::invalid_contour, "contour radius must lie in (0, 1)");
  if (options.points < 1)
    throw error(errc::invalid_contour, "contour needs at least one point");
  const auto [j, l] = complement(k);
  const double x = b * static_cast<double>(gens[k]);
  const double scale = std::pow(r, -x);

  std::complex<double> total{0.0, 0.0};
  for (std::int64_t i = 0; i < options.points; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) /
                     static_cast<double>(options.points);
    total += pair_hilbert_value(gens[j], gens[l], std::polar(r, t)) *
             std::polar(scale, -x * t);
  }
  return 1.0 - (total / static_cast<double>(options.points)).real();
}

std::vector<std::pair<std::int64_t, int>>
xi_sweep(const Generators& gens, Axis k, std::int64_t b_min, std::int64_t b_max) {
  const std::int64_t bound = diagonal_bound(gens, k);
  if (b_min < 1 || b_max < b_min || b_max > bound)
    throw error(errc::range_error, "b range [" + std::to_string(b_min) + ", " +
                                       std::to_string(b_max) + "] outside [1, " +
                                       std::to_string(bound) + "]");
  std::vector<std::pair<std::int64_t, int>> out;
  out.reserve(static_cast<std::size_t>(b_max - b_min + 1));
  for (std::int64_t b = b_min; b <= b_max; ++b) out.emplace_back(b, xi(gens, k, b));
  return out;
}

DiagonalTriple diagonal_via_xi(const Generators& gens) {
  require_triple(gens);
  DiagonalTriple diag;
  for (Axis k : all_axes) {
    const std::int64_t bound = diagonal_bound(gens, k);
    std::int64_t found = 0;
    for (std::int64_t b = 2; b <= bound && found == 0; ++b)
      if (xi(gens, k, b) == 0) found = b;
    if (found == 0)
      throw error(errc::no_zero_in_range,
                  "no zero of xi in [2, " + std::to_string(bound) + "] for " +
                      gens.to_string());
    diag.a[index(k)] = found;
  }
  return diag;
}

DiagonalTriple diagonal_via_psi(const Generators& gens) {
  require_triple(gens);
  DiagonalTriple diag;
  for (Axis k : all_axes) {
    const auto series = psi(gens, k);
    const auto lead = series.leading_multiple();
    if (!lead)
      throw error(errc::horizon_too_small,
                  "psi has no term below horizon " +
                      std::to_string(series.base.horizon()));
    diag.a[index(k)] = *lead;
  }
  return diag;
}

std::optional<SymmetricPair> is_symmetric(const Generators& gens,
                                          const DiagonalTriple& diag) {
  require_triple(gens);
  constexpr std::array<std::pair<Axis, Axis>, 3> pairs{
      {{Axis::first, Axis::second},
       {Axis::first, Axis::third},
       {Axis::second, Axis::third}}};
  for (auto [i, j] : pairs)
    if (arith::mul(diag[i], gens[i]) == arith::mul(diag[j], gens[j]))
      return SymmetricPair{i, j};
  return std::nullopt;
}

std::int64_t diagonal_pairing(const Generators& gens, const DiagonalTriple& diag) {
  require_triple(gens);
  std::int64_t total = 0;
  for (Axis k : all_axes) total = arith::add(total, arith::mul(diag[k], gens[k]));
  return total;
}

int128 j_squared(const Generators& gens, const DiagonalTriple& diag) {
  const int128 ad = diagonal_pairing(gens, diag);
  int128 e[3];
  for (Axis k : all_axes) e[index(k)] = static_cast<int128>(diag[k]) * gens[k];
  return ad * ad - 4 * (e[0] * e[1] + e[1] * e[2] + e[2] * e[0]) +
         4 * static_cast<int128>(gens[0]) * gens[1] * gens[2];
}

AssemblyCheck check_matrix(const Generators& gens, const JohnsonMatrix& m) {
  require_triple(gens);
  AssemblyCheck c;
  c.integral = true;
  c.nonnegative = true;
  for (const auto& row : m.a)
    for (auto v : row)
      if (v < 0) c.nonnegative = false;

  c.relations = true;
  c.row_gcd = true;
  for (int k = 0; k < 3; ++k) {
    int128 rhs = 0;
    for (int j = 0; j < 3; ++j)
      if (j != k) rhs += static_cast<int128>(m.a[k][j]) * gens[j];
    if (static_cast<int128>(m.a[k][k]) * gens[k] != rhs) c.relations = false;
    if (arith::gcd3(m.a[k][0], m.a[k][1], m.a[k][2]) != 1) c.row_gcd = false;
  }

  const auto& a = m.a;
  auto prod = [](std::int64_t x, std::int64_t y) { return static_cast<int128>(x) * y; };
  c.identities = a[1][0] + a[2][0] == a[0][0] && a[0][1] + a[2][1] == a[1][1] &&
                 a[0][2] + a[1][2] == a[2][2] &&
                 prod(a[1][2], a[2][1]) == prod(a[1][1], a[2][2]) - gens[0] &&
                 prod(a[0][2], a[2][0]) == prod(a[0][0], a[2][2]) - gens[1] &&
                 prod(a[0][1], a[1][0]) == prod(a[0][0], a[1][1]) - gens[2];
  return c;
}

RootSelection select_roots(const Generators& gens, const DiagonalTriple& diag) {
  require_triple(gens);
  RootSelection sel;
  sel.pairing = diagonal_pairing(gens, diag);
  const auto j = arith::exact_sqrt(j_squared(gens, diag));
  if (!j)
    throw error(errc::not_perfect_square,
                "J^2 is not a perfect square for " + gens.to_string());
  sel.j = *j;

  // Entry (row, col) with third index k solves a quadratic with linear
  // coefficient <a,d> - 2 a_kk d_k and leading coefficient d_col.
  auto root = [&](int row, int col, int sign) {
    const int k = 3 - row - col;
    const std::int64_t lin =
        arith::sub(sel.pairing, arith::mul(2, arith::mul(diag.a[k], gens[k])));
    return Root{arith::add(lin, sign * sel.j), arith::mul(2, gens[col])};
  };
  auto assemble = [&](auto sign_of) {
    RootAssembly roots;
    for (std::size_t s = 0; s < slots.size(); ++s)
      roots[s] = root(slots[s].first, slots[s].second,
                      sign_of(slots[s].first, slots[s].second));
    return check_assembly(gens, diag, roots);
  };

  sel.cyclic = assemble([](int r, int c) { return is_cyclic(r, c) ? 1 : -1; });
  sel.anticyclic = assemble([](int r, int c) { return is_cyclic(r, c) ? -1 : 1; });
  sel.uniform_plus = assemble([](int, int) { return 1; });
  sel.uniform_minus = assemble([](int, int) { return -1; });
  sel.cyclic_selected = sel.cyclic.passes() || !sel.anticyclic.passes();
  return sel;
}

JohnsonMatrix off_diagonal(const Generators& gens, const DiagonalTriple& diag) {
  require_triple(gens);
  if (is_symmetric(gens, diag))
    throw error(errc::symmetric_semigroup,
                "off-diagonal entries are not determined for the symmetric " +
                    gens.to_string());
  const RootSelection sel = select_roots(gens, diag);
  if (sel.cyclic.passes() && sel.anticyclic.passes())
    throw error(errc::root_selection_ambiguous,
                "both root assemblies pass for " + gens.to_string());
  if (!sel.selected().passes())
    throw error(errc::no_valid_assembly,
                "no root assembly passes for " + gens.to_string());
  return to_matrix(diag, sel.selected().roots);
}

} // namespace frob3
