#pragma once

// Independent reference computations used only by the tests.  Nothing here
// calls into the library's quadrature or special-function code.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

namespace oracle {

// U(a, b, z) = 1/Gamma(a) Int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt, a > 0.
inline double tricomi_u_quadrature(double a, double b, double z) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [=](double t) {
    return std::exp(-z * t) * std::pow(t, a - 1.0) * std::pow(1.0 + t, b - a - 1.0);
  };
  return integrator.integrate(f) / boost::math::tgamma(a);
}

// L_k^(alpha)(z) = sum_j (-1)^j binom(k + alpha, k - j) z^j / j!
inline double laguerre_series(int k, double alpha, double z) {
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    // Generalized binomial via Gamma functions.
    const double binom = boost::math::tgamma(k + alpha + 1.0) /
                         (boost::math::tgamma(k - j + 1.0) * boost::math::tgamma(alpha + j + 1.0));
    sum += (j % 2 == 0 ? 1.0 : -1.0) * binom * std::pow(z, j) / boost::math::factorial<double>(j);
  }
  return sum;
}

// Sum of |terms| of the series above; bounds its cancellation error.
inline double laguerre_series_scale(int k, double alpha, double z) {
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double binom = boost::math::tgamma(k + alpha + 1.0) /
                         (boost::math::tgamma(k - j + 1.0) * boost::math::tgamma(alpha + j + 1.0));
    sum += std::abs(binom * std::pow(z, j) / boost::math::factorial<double>(j));
  }
  return sum;
}

// (-1)^{m-1} (m-1)! e^{-z/2} z L_{m-1}^{(1)}(z), via the series above.
inline double whittaker_integer_kappa(int m, double z) {
  const double sign = (m - 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * boost::math::factorial<double>(m - 1) * std::exp(-0.5 * z) * z *
         laguerre_series(m - 1, 1.0, z);
}

// Magnitude scale of the expression above: the same prefactor times the sum
// of |series terms|.
inline double whittaker_integer_kappa_scale(int m, double z) {
  return boost::math::factorial<double>(m - 1) * std::exp(-0.5 * z) * z * laguerre_series_scale(m - 1, 1.0, z);
}

// Midpoint rule on [lo, hi] with n panels.
template <class F>
double midpoint(F&& f, double lo, double hi, long n) {
  const double h = (hi - lo) / static_cast<double>(n);
  double sum = 0.0;
  for (long i = 0; i < n; ++i) sum += f(lo + (static_cast<double>(i) + 0.5) * h);
  return sum * h;
}

}  // namespace oracle
