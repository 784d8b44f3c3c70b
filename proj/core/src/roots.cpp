#include "hydro1d/roots.hpp"

#include <cmath>
#include <utility>

#include "hydro1d/errors.hpp"

namespace hydro1d::roots {

Root bracketed(const std::function<double(double)>& f, double lo, double hi,
               double rel_tol, double abs_tol, int max_iter) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw DomainError("root not bracketed");
  }

  // side tracks which endpoint was retained twice in a row (Illinois).
  int side = 0;
  double checkpoint_width = hi - lo;
  for (int it = 1; it <= max_iter; ++it) {
    double x = (lo * fhi - hi * flo) / (fhi - flo);
    // Bisect when the secant leaves the bracket or progress stalls.
    const bool stalled = it % 4 == 0 && hi - lo > 0.5 * checkpoint_width;
    if (it % 4 == 0) checkpoint_width = hi - lo;
    if (!(x > lo && x < hi) || stalled) x = 0.5 * (lo + hi);

    const double fx = f(x);
    if (fx == 0.0) return {x, 0.0, it};

    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == 1) flo *= 0.5;
      side = 1;
    }

    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * std::abs(mid) + abs_tol) {
      return {mid, f(mid), it};
    }
  }
  throw ConvergenceError("bracketed root refinement did not converge", hi - lo);
}

}  // namespace hydro1d::roots
