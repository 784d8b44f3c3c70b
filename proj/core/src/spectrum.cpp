#include "hydro1d/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hydro1d/errors.hpp"
#include "hydro1d/quadrature.hpp"
#include "hydro1d/specfun.hpp"

namespace hydro1d {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

QuantumNumber::QuantumNumber(int n) : n_(n) {
  if (n < 0) throw DomainError("quantum number must be non-negative");
}

}  // namespace hydro1d

namespace hydro1d::spectrum {
namespace {

constexpr double kMinResidualDistance = 0.05;

double squared_norm(QuantumNumber n, double scale) {
  const int np1 = n.value() + 1;
  auto density = [n, scale](double x) {
    const double psi = scale * wavefunction(n, x);
    return psi * psi;
  };

  // Peak of psi^2 from a coarse scan, then walk outward from the turning
  // point until the density drops below 1e-16 of it.
  const double turning = 0.5 * np1 * np1;
  double peak = density(0.0);
  for (int i = 1; i <= 400; ++i) peak = std::max(peak, density(i * 0.01 * turning * 4.0));
  double x_max = turning;
  const double step = 0.5 * np1;
  while (density(x_max) >= 1e-16 * peak) x_max += step;

  quad::AdaptiveOptions opts;
  opts.rel_tol = 1e-12;
  // Split at the origin cusp scale and the turning point.
  double total = 0.0;
  double error = 0.0;
  const std::array<double, 4> cuts = {0.0, 0.05 * np1, turning, x_max};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const quad::Result r = quad::integrate(density, cuts[i], cuts[i + 1], opts);
    total += r.value;
    error += r.error;
  }
  total *= 2.0;
  error *= 2.0;
  if (!(error <= 1e-10 * total)) {
    throw ConvergenceError("normalization quadrature did not converge for n=" +
                               std::to_string(n.value()),
                           error / total);
  }
  return total;
}

double second_derivative(QuantumNumber n, double x) {
  // Ridders-style extrapolation over h, h/2, h/4, ...; the central second
  // difference has an even error series so each column removes a power h^2.
  constexpr int kTable = 8;
  constexpr double kShrink = 2.0;
  constexpr double kSafe = 2.0;
  std::array<std::array<double, kTable>, kTable> t{};

  auto diff = [n, x](double h) {
    return (wavefunction(n, x + h) - 2.0 * wavefunction(n, x) + wavefunction(n, x - h)) /
           (h * h);
  };

  double h = std::min(0.2, 0.25 * std::abs(x));
  t[0][0] = diff(h);
  double best = t[0][0];
  double err = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kTable; ++i) {
    h /= kShrink;
    t[0][i] = diff(h);
    double fac = kShrink * kShrink;
    for (int j = 1; j <= i; ++j) {
      t[j][i] = (t[j - 1][i] * fac - t[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink * kShrink;
      const double e = std::max(std::abs(t[j][i] - t[j - 1][i]),
                                std::abs(t[j][i] - t[j - 1][i - 1]));
      if (e <= err) {
        err = e;
        best = t[j][i];
      }
    }
    if (std::abs(t[i][i] - t[i - 1][i - 1]) >= kSafe * err) break;
  }
  return best;
}

}  // namespace

double exact_energy(QuantumNumber n) {
  const double np1 = n.value() + 1.0;
  return -2.0 / (np1 * np1);
}

double wavefunction(QuantumNumber n, double x) {
  if (!std::isfinite(x)) throw DomainError("wavefunction: non-finite x");
  const specfun::WhittakerParams p{n.kappa(), 0.5, 4.0 * std::abs(x) / (n.value() + 1)};
  const double w = specfun::whittaker_w(p);
  return (x < 0.0 && n.parity() == Parity::odd) ? -w : w;
}

BoundState normalize(QuantumNumber n) {
  const double norm = 1.0 / std::sqrt(squared_norm(n, 1.0));
  return {n, exact_energy(n), n.parity(), norm};
}

double normalized_wavefunction(const BoundState& s, double x) {
  return s.norm * wavefunction(s.n, x);
}

double normalization_factor(const BoundState& s) {
  return 1.0 / std::sqrt(squared_norm(s.n, s.norm));
}

Window default_window(QuantumNumber n) {
  const double np1 = n.value() + 1.0;
  return {-4.0 * np1 * np1, 4.0 * np1 * np1};
}

int node_count(QuantumNumber n, std::optional<Window> window, std::optional<long> samples) {
  const Window w = window.value_or(default_window(n));
  const long count = samples.value_or(1000L * (n.value() + 1));
  if (!(w.hi > 0.0) || w.lo != -w.hi) {
    throw DomainError("node_count: window must be symmetric about 0");
  }
  if (count < 1000L * (n.value() + 1)) {
    throw DomainError("node_count: need at least 1000 (n+1) samples");
  }

  const double dx = (w.hi - w.lo) / static_cast<double>(count);
  const double outer = 0.95 * w.hi;
  int changes = 0;
  int prev_sign[2] = {0, 0};  // [0] for x < 0, [1] for x > 0
  double prev_x[2] = {0.0, 0.0};
  for (long j = 0; j < count; ++j) {
    const double x = w.lo + (static_cast<double>(j) + 0.5) * dx;
    const double psi = wavefunction(n, x);
    if (psi == 0.0) continue;
    const int side = x > 0.0 ? 1 : 0;
    const int sign = psi > 0.0 ? 1 : -1;
    if (prev_sign[side] != 0 && sign != prev_sign[side]) {
      if (std::abs(x) > outer || std::abs(prev_x[side]) > outer) {
        throw DomainError("node_count: sign change in the outer 5% of the window; widen it");
      }
      ++changes;
    }
    prev_sign[side] = sign;
    prev_x[side] = x;
  }
  if (n.parity() == Parity::odd) ++changes;
  return changes;
}

double ode_residual(QuantumNumber n, double x) {
  if (!std::isfinite(x)) throw DomainError("ode_residual: non-finite x");
  if (std::abs(x) < kMinResidualDistance) {
    throw DomainError("ode_residual: |x| < 0.05, finite differences cannot resolve the cusp");
  }
  const double psi = wavefunction(n, x);
  const double d2 = second_derivative(n, x);
  return std::abs(-0.5 * d2 - psi / std::abs(x) - exact_energy(n) * psi);
}

double cusp_indicator(QuantumNumber n, double h) {
  if (n.parity() != Parity::even) {
    throw DomainError("cusp_indicator: odd states vanish linearly at the origin");
  }
  if (!(h > 0.0 && h <= 0.1)) throw DomainError("cusp_indicator: h must lie in (0, 0.1]");
  return (wavefunction(n, h) - wavefunction(n, 0.0)) / h;
}

}  // namespace hydro1d::spectrum
