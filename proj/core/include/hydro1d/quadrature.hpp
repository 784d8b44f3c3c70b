#pragma once

#include <functional>
#include <vector>

namespace hydro1d::quad {

using Integrand = std::function<double(double)>;

struct Result {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int evaluations = 0;
  bool converged = false;
};

struct AdaptiveOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-13;
  int max_intervals = 4000;
};

/// Globally adaptive 10/21-point Gauss-Kronrod integration on [lo, hi].
/// The interval with the largest error estimate is bisected until the total
/// estimate drops below max(abs_tol, rel_tol * |value|).  Never throws; check
/// Result::converged.
Result integrate(const Integrand& f, double lo, double hi,
                 const AdaptiveOptions& opts = {});

/// Integrate over [lo, inf) through the map x = lo + t / (1 - t), t in [0, 1).
Result integrate_to_infinity(const Integrand& f, double lo,
                             const AdaptiveOptions& opts = {});

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// Apply a rule to [lo, hi].
double apply(const GaussLegendreRule& rule, const Integrand& f, double lo,
             double hi);

/// Gauss-Legendre with order doubling (starting at `start_order`) until two
/// successive estimates agree to max(abs_tol, rel_tol * |value|).
Result gauss_legendre_doubling(const Integrand& f, double lo, double hi,
                               double rel_tol, double abs_tol = 0.0,
                               int start_order = 8, int max_order = 4096);

}  // namespace hydro1d::quad
