#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hydro1d/gridsolver.hpp"

namespace hydro1d::regularized {

/// -2 ln^2(1/a): logarithmic-accuracy estimate of the soft-core ground level.
double loudon_estimate(double a);

/// Mesh with h <= a / points_per_core on [-L, L] (even N).
grid::Grid core_resolving_grid(double a, double half_width = 30.0, double points_per_core = 5.0);

/// Throws RegimeError (carrying the smallest acceptable N) when h > a/5.
void require_resolved(double a, const grid::Grid& g);

struct SoftCoreRow {
  double a = 0.0;
  double ground_energy = 0.0;
  double loudon = 0.0;
  double ratio = 0.0;        // ground_energy / loudon
  double odd_energy = 0.0;   // first excited (odd) level
  grid::Grid grid;
};

struct SoftCoreScan {
  std::vector<SoftCoreRow> rows;  // in input order
  /// E0 strictly decreases as a decreases across the scanned values.
  bool diverging = false;
};

/// Ground and first odd level of -1/(|x| + a) for each a in (0, 0.5].  With no
/// grid, each a gets core_resolving_grid(a); a supplied grid must resolve
/// every a or the scan is refused.
SoftCoreScan soft_core_ground_scan(std::span<const double> a_values,
                                   std::optional<grid::Grid> g = std::nullopt);

struct CareResult {
  double a = 0.0;
  double b = 0.0;
  std::vector<grid::Level> levels;
  /// Parities strictly alternate with increasing energy.
  bool interleaved = false;
  /// 1 < b/a < ln(1/a).
  bool in_stated_regime = false;
  std::string warning;
  grid::Grid grid;
};

/// Lowest k_max levels of -(|x| - b)/(|x| + a)^2 with measured parity labels.
/// Outside 1 < b/a < ln(1/a) the result carries a warning but is still
/// computed.
CareResult care_interleaving(double a, double b, std::optional<grid::Grid> g, int k_max);

/// L = 60, N = 12000.
grid::Grid default_half_line_grid();

/// Lowest k_max energies of -1/x on x > 0 with a hard wall at the origin.
std::vector<double> half_line_spectrum(const grid::Grid& g, int k_max);

}  // namespace hydro1d::regularized
