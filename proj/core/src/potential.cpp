#include "hydro1d/potential.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hydro1d/errors.hpp"

namespace hydro1d {

PotentialSpec PotentialSpec::pure_coulomb() { return {PotentialFamily::pure_coulomb, 0.0, 0.0}; }

PotentialSpec PotentialSpec::soft_core(double a) {
  PotentialSpec v{PotentialFamily::soft_core, a, 0.0};
  v.validate();
  return v;
}

PotentialSpec PotentialSpec::repulsive_core(double a, double b) {
  PotentialSpec v{PotentialFamily::repulsive_core, a, b};
  v.validate();
  return v;
}

PotentialSpec PotentialSpec::half_line() { return {PotentialFamily::half_line, 0.0, 0.0}; }

void PotentialSpec::validate() const {
  switch (family) {
    case PotentialFamily::soft_core:
      if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("soft-core needs a > 0");
      break;
    case PotentialFamily::repulsive_core:
      if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("repulsive-core needs a > 0");
      if (!(b >= 0.0) || !std::isfinite(b)) throw DomainError("repulsive-core needs b >= 0");
      break;
    case PotentialFamily::pure_coulomb:
    case PotentialFamily::half_line:
      break;
  }
}

double PotentialSpec::floor() const {
  switch (family) {
    case PotentialFamily::soft_core:
      return -1.0 / a;
    case PotentialFamily::repulsive_core:
      // Minimum at |x| = a + 2b.
      return -1.0 / (4.0 * (a + b));
    case PotentialFamily::pure_coulomb:
    case PotentialFamily::half_line:
      break;
  }
  return -std::numeric_limits<double>::infinity();
}

double evaluate(const PotentialSpec& v, double x) {
  if (!std::isfinite(x)) throw DomainError("potential: non-finite x");
  const double r = std::abs(x);
  switch (v.family) {
    case PotentialFamily::pure_coulomb:
      if (x == 0.0) throw DomainError("pure Coulomb potential is singular at x = 0");
      return -1.0 / r;
    case PotentialFamily::soft_core:
      return -1.0 / (r + v.a);
    case PotentialFamily::repulsive_core: {
      const double d = r + v.a;
      return -(r - v.b) / (d * d);
    }
    case PotentialFamily::half_line:
      if (x <= 0.0) return std::numeric_limits<double>::infinity();
      return -1.0 / x;
  }
  return 0.0;
}

std::string to_string(PotentialFamily family) {
  switch (family) {
    case PotentialFamily::pure_coulomb: return "pure-coulomb";
    case PotentialFamily::soft_core: return "soft-core";
    case PotentialFamily::repulsive_core: return "repulsive-core";
    case PotentialFamily::half_line: return "half-line";
  }
  return "unknown";
}

PotentialFamily parse_family(const std::string& name) {
  if (name == "pure-coulomb" || name == "coulomb") return PotentialFamily::pure_coulomb;
  if (name == "soft-core") return PotentialFamily::soft_core;
  if (name == "repulsive-core" || name == "care") return PotentialFamily::repulsive_core;
  if (name == "half-line") return PotentialFamily::half_line;
  throw DomainError("unknown potential family '" + name + "'");
}

std::string describe(const PotentialSpec& v) {
  std::ostringstream os;
  os.precision(17);
  os << to_string(v.family);
  if (v.family == PotentialFamily::soft_core) os << "(a=" << v.a << ")";
  if (v.family == PotentialFamily::repulsive_core) os << "(a=" << v.a << ", b=" << v.b << ")";
  return os.str();
}

}  // namespace hydro1d
