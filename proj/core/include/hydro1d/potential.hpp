#pragma once

#include <string>

namespace hydro1d {

enum class PotentialFamily { pure_coulomb, soft_core, repulsive_core, half_line };

/// One of the Coulomb-type potentials, in atomic units:
///   pure_coulomb    V(x) = -1/|x|
///   soft_core       V(x) = -1/(|x| + a),          a > 0
///   repulsive_core  V(x) = -(|x| - b)/(|x| + a)^2, a > 0, b >= 0
///   half_line       V(x) = -1/x for x > 0, infinite wall at x <= 0
struct PotentialSpec {
  PotentialFamily family = PotentialFamily::pure_coulomb;
  double a = 0.0;
  double b = 0.0;

  static PotentialSpec pure_coulomb();
  static PotentialSpec soft_core(double a);
  static PotentialSpec repulsive_core(double a, double b);
  static PotentialSpec half_line();

  /// Throws DomainError if the parameters violate the family's constraints.
  void validate() const;

  bool symmetric() const { return family != PotentialFamily::half_line; }
  bool singular_at_origin() const {
    return family == PotentialFamily::pure_coulomb || family == PotentialFamily::half_line;
  }
  bool half_line_domain() const { return family == PotentialFamily::half_line; }

  /// Lowest value V takes (-inf for the singular families).
  double floor() const;
};

/// V(x).  The half-line wall is +infinity.  pure_coulomb at x = 0 throws.
double evaluate(const PotentialSpec& v, double x);

std::string to_string(PotentialFamily family);
/// Accepts the names produced by to_string plus "care" for repulsive_core.
PotentialFamily parse_family(const std::string& name);
std::string describe(const PotentialSpec& v);

}  // namespace hydro1d
