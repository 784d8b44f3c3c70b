#pragma once

#include <functional>

namespace hydro1d::roots {

struct Root {
  double x = 0.0;
  double f = 0.0;
  int iterations = 0;
};

/// Bracketed root refinement: secant (Illinois variant) steps guarded by
/// bisection.  Requires f(lo) and f(hi) of opposite sign (or one of them
/// zero); throws DomainError otherwise.  Stops when the bracket width falls
/// below rel_tol * |x| + abs_tol.
Root bracketed(const std::function<double(double)>& f, double lo, double hi,
               double rel_tol, double abs_tol = 0.0, int max_iter = 400);

}  // namespace hydro1d::roots
