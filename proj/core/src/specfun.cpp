#include "hydro1d/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hydro1d/errors.hpp"
#include "hydro1d/quadrature.hpp"

namespace hydro1d::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kIntegralTarget = 1e-10;
constexpr double kRecurrenceTarget = 1e-8;

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::floor(a); }

// sin(pi x), exact at integers and half-integers.
double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(std::numbers::pi * r);
}

// U(a, b, z) = z^(1-b) / Gamma(a) * Int_0^inf e^-s s^(a-1) (z+s)^(b-a-1) ds
// after rescaling t = s/z.  The s^(a-1) endpoint singularity on [0, 1] is
// absorbed by s = u^(1/a).
Evaluation u_integral(double a, double b, double z) {
  const double expo = b - a - 1.0;
  quad::AdaptiveOptions opts;
  opts.rel_tol = 1e-13;

  auto near = [a, z, expo](double u) {
    const double s = std::pow(u, 1.0 / a);
    return std::exp(-s) * std::pow(z + s, expo);
  };
  auto far = [a, z, expo](double s) {
    return std::exp(-s) * std::pow(s, a - 1.0) * std::pow(z + s, expo);
  };

  const quad::Result inner = quad::integrate(near, 0.0, 1.0, opts);
  const quad::Result outer = quad::integrate_to_infinity(far, 1.0, opts);

  const double scale = std::pow(z, 1.0 - b) * reciprocal_gamma(a);
  const double value = scale * (inner.value / a + outer.value);
  const double error =
      std::abs(scale) * (inner.error / a + outer.error) + 4.0 * kEps * std::abs(value);

  Evaluation out{value, error};
  if (!(out.relative_error() <= kIntegralTarget)) {
    throw ConvergenceError("tricomi_u: integral representation missed 1e-10 target at a=" +
                               std::to_string(a) + ", z=" + std::to_string(z),
                           out.relative_error());
  }
  return out;
}

// Laguerre recurrence carrying a running bound on rounding error.
Evaluation laguerre_eval(int k, double alpha, double z) {
  double prev = 1.0;
  if (k == 0) return {1.0, 0.0};
  double cur = 1.0 + alpha - z;
  double prev_abs = 1.0;
  double cur_abs = 1.0 + std::abs(alpha) + std::abs(z);
  for (int j = 1; j < k; ++j) {
    const double c1 = (2.0 * j + 1.0 + alpha - z) / (j + 1.0);
    const double c2 = (j + alpha) / (j + 1.0);
    const double next = c1 * cur - c2 * prev;
    const double next_abs = std::abs(c1) * cur_abs + std::abs(c2) * prev_abs;
    prev = cur;
    prev_abs = cur_abs;
    cur = next;
    cur_abs = next_abs;
  }
  return {cur, 2.0 * (k + 1) * kEps * cur_abs};
}

Evaluation u_polynomial(double a, double b, double z) {
  const int k = static_cast<int>(-a);
  const Evaluation lag = laguerre_eval(k, b - 1.0, z);
  // (-1)^k k!
  double factor = 1.0;
  for (int j = 2; j <= k; ++j) factor *= j;
  if (k % 2 == 1) factor = -factor;
  return {factor * lag.value, std::abs(factor) * lag.error};
}

// Seeds U(f), U(f+1) with f in (0, 1], then steps a down with
//   U(c-1) = (z + 2c - b) U(c) - c (1 + c - b) U(c+1).
Evaluation u_recurrence(double a, double b, double z) {
  double f = a - std::floor(a);
  if (f == 0.0) f = 1.0;
  const int steps = static_cast<int>(std::lround(f - a));

  const Evaluation upper = u_integral(f + 1.0, b, z);
  const Evaluation lower = u_integral(f, b, z);
  double u_hi = upper.value;
  double u_cur = lower.value;
  double e_hi = upper.error;
  double e_cur = lower.error;
  double scale = std::max(std::abs(u_hi), std::abs(u_cur));

  double c = f;
  for (int i = 0; i < steps; ++i) {
    const double p = z + 2.0 * c - b;
    const double q = c * (1.0 + c - b);
    const double t1 = p * u_cur;
    const double t2 = q * u_hi;
    const double next = t1 - t2;
    const double e_next =
        std::abs(p) * e_cur + std::abs(q) * e_hi + 2.0 * kEps * (std::abs(t1) + std::abs(t2));
    scale = std::max(std::abs(t1), std::abs(t2));
    u_hi = u_cur;
    e_hi = e_cur;
    u_cur = next;
    e_cur = e_next;
    c -= 1.0;
  }

  // Near a zero of U the relative error is meaningless; judge the
  // propagated error against the size of the terms that cancelled.
  if (!(e_cur <= kRecurrenceTarget * std::max(std::abs(u_cur), scale))) {
    throw ConvergenceError("tricomi_u: recurrence in a lost accuracy at a=" +
                               std::to_string(a) + ", z=" + std::to_string(z),
                           e_cur / std::max(std::abs(u_cur), scale));
  }
  return {u_cur, e_cur};
}

}  // namespace

double Evaluation::relative_error() const {
  if (value == 0.0) return error == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return error / std::abs(value);
}

double laguerre(int k, double alpha, double z) {
  if (k < 0) throw DomainError("laguerre: degree must be non-negative");
  if (!std::isfinite(alpha) || !std::isfinite(z)) {
    throw DomainError("laguerre: non-finite argument");
  }
  return laguerre_eval(k, alpha, z).value;
}

Evaluation tricomi_u_eval(double a, double b, double z, UPath path) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) {
    throw DomainError("tricomi_u: non-finite argument");
  }
  if (z <= 0.0) throw DomainError("tricomi_u: z must be positive");

  const bool polynomial_case = is_nonpositive_integer(a);
  switch (path) {
    case UPath::polynomial:
      if (!polynomial_case) {
        throw DomainError("tricomi_u: polynomial path needs a non-positive integer a");
      }
      return u_polynomial(a, b, z);
    case UPath::automatic:
      if (polynomial_case) return u_polynomial(a, b, z);
      [[fallthrough]];
    case UPath::integral_recurrence:
      break;
  }
  if (a > 0.0) return u_integral(a, b, z);
  return u_recurrence(a, b, z);
}

double tricomi_u(double a, double b, double z) { return tricomi_u_eval(a, b, z).value; }

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 0.0) {
    if (x < 150.0) return 1.0 / std::tgamma(x);
    return std::exp(-std::lgamma(x));
  }
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi, with 1 - x > 1.
  return sin_pi(x) * std::exp(std::lgamma(1.0 - x)) / std::numbers::pi;
}

double whittaker_w_origin(double kappa) { return reciprocal_gamma(1.0 - kappa); }

namespace {

void check_params(const WhittakerParams& p) {
  if (!std::isfinite(p.kappa) || !std::isfinite(p.mu) || !std::isfinite(p.z)) {
    throw DomainError("whittaker_w: non-finite argument");
  }
  if (p.mu != 0.5) throw DomainError("whittaker_w: only mu = 1/2 is supported");
  const double twice = 2.0 * p.kappa;
  if (twice < 1.0 || twice != std::floor(twice)) {
    throw DomainError("whittaker_w: kappa must be a positive multiple of 1/2");
  }
  if (p.z < 0.0) throw DomainError("whittaker_w: z must be non-negative");
}

}  // namespace

Evaluation whittaker_w_eval(const WhittakerParams& p, UPath path) {
  check_params(p);
  if (p.z == 0.0) return {whittaker_w_origin(p.kappa), 0.0};
  const Evaluation u = tricomi_u_eval(1.0 - p.kappa, 2.0, p.z, path);
  const double prefactor = std::exp(-0.5 * p.z) * p.z;
  return {prefactor * u.value, prefactor * u.error};
}

double whittaker_w(const WhittakerParams& p) { return whittaker_w_eval(p).value; }

}  // namespace hydro1d::specfun
