#pragma once

// Confluent hypergeometric U(a, b, z) and Whittaker W_{kappa, 1/2}(z) for real
// positive arguments.  Only the index combinations needed by the bound states
// of the 1D Coulomb problem are supported: mu = 1/2 and kappa a positive
// multiple of 1/2, so that U is always evaluated at b = 2 (logarithmic case).

namespace hydro1d::specfun {

/// A value together with its estimated absolute error.
struct Evaluation {
  double value = 0.0;
  double error = 0.0;

  double relative_error() const;
};

struct WhittakerParams {
  double kappa = 0.5;
  double mu = 0.5;
  double z = 0.0;
};

/// Which route tricomi_u takes.
///  - automatic: Laguerre reduction for non-positive integer a, otherwise the
///    integral representation (a > 0) or integral seeds plus the downward
///    three-term recurrence in a (a <= 0).
///  - integral_recurrence: never use the polynomial reduction.  For integer
///    a <= 0 this seeds the recurrence at a = 1, 2.
///  - polynomial: Laguerre reduction only; a must be a non-positive integer.
enum class UPath { automatic, integral_recurrence, polynomial };

/// Generalized Laguerre polynomial L_k^(alpha)(z) by forward recurrence.
double laguerre(int k, double alpha, double z);

/// Tricomi U(a, b, z), z > 0.  Throws DomainError for non-finite input or
/// z <= 0, ConvergenceError when the accuracy contract (1e-10 relative on the
/// integral path, 1e-8 after recurrence) cannot be met.
Evaluation tricomi_u_eval(double a, double b, double z,
                          UPath path = UPath::automatic);
double tricomi_u(double a, double b, double z);

/// 1/Gamma(x) for any real x; zero at the poles x = 0, -1, -2, ...
/// Negative arguments go through the reflection formula.
double reciprocal_gamma(double x);

/// lim_{z->0+} W_{kappa,1/2}(z): 1/Gamma(1 - kappa), which is zero for
/// integer kappa.
double whittaker_w_origin(double kappa);

/// W_{kappa,1/2}(z) = exp(-z/2) z U(1 - kappa, 2, z), z >= 0.
Evaluation whittaker_w_eval(const WhittakerParams& p,
                            UPath path = UPath::automatic);
double whittaker_w(const WhittakerParams& p);

}  // namespace hydro1d::specfun
