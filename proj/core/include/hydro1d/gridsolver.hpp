#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hydro1d/potential.hpp"

namespace hydro1d::grid {

/// Uniform mesh for -psi''/2 + V psi = E psi with Dirichlet walls.
///
/// Full line: walls at +-L, spacing h = 2L/N.  Half line: walls at 0 and L,
/// spacing h = L/N.  A staggered mesh puts the N unknowns at half-integer
/// multiples of h, so x = 0 is never a grid point; the walls then fall half a
/// step outside the outermost unknowns and are imposed with a mirrored ghost
/// value.  A non-staggered mesh has the N - 1 interior nodes j h.
struct Grid {
  double half_width = 30.0;
  long points = 6000;
  bool staggered = true;

  double spacing(bool half_line) const;
  std::vector<double> coordinates(bool half_line) const;
  /// Throws DomainError for h <= 0 or a staggered full-line mesh with odd N
  /// (which would put a node on the origin).
  void validate(bool half_line) const;
};

/// The operator being discretized.  Potential families map onto this with
/// hamiltonian(); the calibration potentials are built directly.
struct Hamiltonian {
  std::function<double(double)> potential;
  bool half_line = false;
  bool singular_at_origin = false;
  bool symmetric = false;
  std::string label;
};

Hamiltonian hamiltonian(const PotentialSpec& v);
Hamiltonian harmonic_oscillator();  // V = x^2 / 2
Hamiltonian free_box();             // V = 0

enum class LevelParity { even, odd, none };

const char* to_string(LevelParity p);

struct Level {
  int index = 0;
  double energy = 0.0;
  LevelParity parity = LevelParity::none;
  int nodes = 0;
  /// min over signs of ||v(-x) -+ v(x)|| / ||v||; 0 when not applicable.
  double parity_residual = 0.0;
};

struct SolveOptions {
  double eigen_tolerance = 1e-13;  // relative, on each eigenvalue
  bool keep_vectors = false;
  int max_inverse_iterations = 6;
};

struct SpectrumResult {
  std::vector<Level> levels;
  Grid grid;
  std::string potential;
  std::optional<PotentialSpec> spec;
  /// Only filled when SolveOptions::keep_vectors; normalized so that
  /// sum v_j^2 h = 1, first significant entry positive.
  std::vector<double> x;
  std::vector<std::vector<double>> vectors;
  /// Largest |x| on the grid with V(x) <= energy of the highest level.
  double outer_turning_point = 0.0;
  /// half_width / outer_turning_point; walls are considered far enough when
  /// this is at least kWallClearance.
  double wall_clearance = 0.0;
};

inline constexpr double kWallClearance = 3.0;

/// Lowest k_max eigenpairs of the tridiagonal matrix with diagonal
/// 1/h^2 + V(x_j) and off-diagonal -1/(2h^2).  Eigenvalues by Sturm-sequence
/// bisection, eigenvectors by inverse iteration.
SpectrumResult solve(const Hamiltonian& h, const Grid& g, int k_max,
                     const SolveOptions& opts = {});
SpectrumResult solve(const PotentialSpec& v, const Grid& g, int k_max,
                     const SolveOptions& opts = {});

struct RefinementStudy {
  std::vector<long> points;
  std::vector<double> energies;
  /// (E_i - E_{i-1}) / (E_{i+1} - E_i); about 4 for a second-order scheme.
  std::vector<double> ratios;
  /// E_last + (E_last - E_prev) / 3.
  double extrapolated = 0.0;
};

/// Solves at N, 2N, ..., 2^refinements N (h, h/2, ...).  refinements in [1, 4].
RefinementStudy refine(const Hamiltonian& h, const Grid& g, int level, int refinements,
                       const SolveOptions& opts = {});
RefinementStudy refine(const PotentialSpec& v, const Grid& g, int level, int refinements,
                       const SolveOptions& opts = {});

}  // namespace hydro1d::grid
