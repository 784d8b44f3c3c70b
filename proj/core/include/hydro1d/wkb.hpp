#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hydro1d/potential.hpp"
#include "hydro1d/spectrum.hpp"

namespace hydro1d::wkb {

struct ActionResult {
  double energy = 0.0;
  double action = 0.0;
  /// Outermost classical turning points.  For the half-line potential the
  /// left entry is the wall at 0.
  std::pair<double, double> turning_points{0.0, 0.0};
  /// Classically allowed intervals on x >= 0 (mirrored for symmetric
  /// potentials).
  std::vector<std::pair<double, double>> allowed;
  double error = 0.0;
};

struct WKBConfig {
  /// Right-hand side is (n + maslov_offset) pi.  1 for the Coulomb
  /// singularity; anything else is off-model and only for experimentation.
  double maslov_offset = 1.0;
  double quadrature_tolerance = 1e-13;
  double energy_tolerance = 1e-13;
  /// Defaults to [4 E_n, E_n / 4] around the exact energy, expanded
  /// geometrically if it fails to bracket.
  std::optional<std::pair<double, double>> root_bracket;
};

/// Action of the pure Coulomb potential,
///   Int_{-1/|E|}^{1/|E|} sqrt(2 (1/|x| - |E|)) dx,
/// by Gauss-Legendre on the substitution x = x_t sin^2(theta), which absorbs
/// both the 1/sqrt(x) origin behavior and the turning-point square root.
ActionResult action(double energy, const WKBConfig& cfg = {});

/// Root of action(E) = (n + maslov_offset) pi.
double wkb_energy(QuantumNumber n, const WKBConfig& cfg = {});

/// Action between the located turning points of any potential family.
ActionResult action_generic(double energy, const PotentialSpec& v, double rel_tol = 1e-11);

}  // namespace hydro1d::wkb
