#include "hydro1d/regularized.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hydro1d/errors.hpp"

namespace hydro1d::regularized {
namespace {

constexpr double kPointsPerCore = 5.0;

}  // namespace

double loudon_estimate(double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("loudon_estimate: a must lie in (0, 1)");
  const double l = std::log(1.0 / a);
  return -2.0 * l * l;
}

grid::Grid core_resolving_grid(double a, double half_width, double points_per_core) {
  if (!(a > 0.0)) throw DomainError("core_resolving_grid: a must be positive");
  auto n = static_cast<long>(std::ceil(2.0 * half_width * points_per_core / a));
  if (n % 2 != 0) ++n;
  return {half_width, n, true};
}

void require_resolved(double a, const grid::Grid& g) {
  const double h = g.spacing(false);
  if (h > a / kPointsPerCore * (1.0 + 1e-12)) {
    const long suggested = core_resolving_grid(a, g.half_width).points;
    std::ostringstream os;
    os << "grid spacing " << h << " does not resolve core a=" << a
       << " (need h <= a/5); use at least N=" << suggested << " for L=" << g.half_width;
    throw RegimeError(os.str(), suggested);
  }
}

SoftCoreScan soft_core_ground_scan(std::span<const double> a_values, std::optional<grid::Grid> g) {
  SoftCoreScan scan;
  for (double a : a_values) {
    if (!(a > 0.0 && a <= 0.5)) throw DomainError("soft_core_ground_scan: a must lie in (0, 0.5]");
    const grid::Grid mesh = g.value_or(core_resolving_grid(a));
    require_resolved(a, mesh);
  }
  for (double a : a_values) {
    const grid::Grid mesh = g.value_or(core_resolving_grid(a));
    const grid::SpectrumResult r = grid::solve(PotentialSpec::soft_core(a), mesh, 2);
    SoftCoreRow row;
    row.a = a;
    row.ground_energy = r.levels[0].energy;
    row.loudon = loudon_estimate(a);
    row.ratio = row.ground_energy / row.loudon;
    row.odd_energy = r.levels[1].energy;
    row.grid = mesh;
    scan.rows.push_back(row);
  }

  // Order by decreasing a and require E0 to fall strictly.
  std::vector<const SoftCoreRow*> order;
  for (const auto& row : scan.rows) order.push_back(&row);
  std::sort(order.begin(), order.end(), [](auto* l, auto* r) { return l->a > r->a; });
  scan.diverging = !order.empty();
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!(order[i]->a < order[i - 1]->a && order[i]->ground_energy < order[i - 1]->ground_energy)) {
      scan.diverging = false;
    }
  }
  return scan;
}

CareResult care_interleaving(double a, double b, std::optional<grid::Grid> g, int k_max) {
  const PotentialSpec v = PotentialSpec::repulsive_core(a, b);
  const grid::Grid mesh = g.value_or(core_resolving_grid(a));
  require_resolved(a, mesh);

  CareResult out;
  out.a = a;
  out.b = b;
  out.grid = mesh;
  const double ratio = b / a;
  out.in_stated_regime = a < 1.0 && ratio > 1.0 && ratio < std::log(1.0 / a);
  if (!out.in_stated_regime) {
    std::ostringstream os;
    os << "b/a=" << ratio << " lies outside 1 < b/a < ln(1/a)";
    if (a < 1.0) os << "=" << std::log(1.0 / a);
    out.warning = os.str();
  }

  out.levels = grid::solve(v, mesh, k_max).levels;
  out.interleaved = !out.levels.empty();
  for (std::size_t i = 0; i < out.levels.size(); ++i) {
    const auto p = out.levels[i].parity;
    if (p == grid::LevelParity::none) out.interleaved = false;
    if (i > 0 && p == out.levels[i - 1].parity) out.interleaved = false;
  }
  return out;
}

grid::Grid default_half_line_grid() { return {60.0, 12000, true}; }

std::vector<double> half_line_spectrum(const grid::Grid& g, int k_max) {
  const grid::SpectrumResult r = grid::solve(PotentialSpec::half_line(), g, k_max);
  std::vector<double> energies;
  for (const auto& level : r.levels) energies.push_back(level.energy);
  return energies;
}

}  // namespace hydro1d::regularized
