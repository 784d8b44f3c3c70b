#include "hydro1d/wkb.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hydro1d/errors.hpp"
#include "hydro1d/quadrature.hpp"
#include "hydro1d/roots.hpp"

namespace hydro1d::wkb {
namespace {

// Int_lo^hi sqrt(2 (E - V)) dx with x = lo + (hi - lo) sin^2(theta).
quad::Result interval_action(double energy, const PotentialSpec& v, double lo, double hi,
                             double rel_tol) {
  const double width = hi - lo;
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double x = lo + width * s * s;
    if (x <= 0.0) return 0.0;
    const double kinetic = 2.0 * (energy - evaluate(v, x));
    if (!(kinetic > 0.0)) return 0.0;
    return std::sqrt(kinetic) * width * std::sin(2.0 * theta);
  };
  quad::AdaptiveOptions opts;
  opts.rel_tol = rel_tol;
  return quad::integrate(integrand, 0.0, 0.5 * std::numbers::pi, opts);
}

}  // namespace

ActionResult action(double energy, const WKBConfig& cfg) {
  if (!(energy < 0.0) || !std::isfinite(energy)) {
    throw DomainError("action: energy must be negative");
  }
  const double binding = -energy;
  const double x_t = 1.0 / binding;

  auto half = [binding, x_t](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double x = x_t * s * s;
    const double kinetic = 2.0 * (1.0 / x - binding);
    if (!(kinetic > 0.0)) return 0.0;
    return std::sqrt(kinetic) * 2.0 * x_t * s * c;
  };

  const quad::Result r = quad::gauss_legendre_doubling(half, 0.0, 0.5 * std::numbers::pi,
                                                       cfg.quadrature_tolerance);
  if (!r.converged) {
    throw ConvergenceError("action: Gauss-Legendre doubling did not converge", r.error);
  }

  ActionResult out;
  out.energy = energy;
  out.action = 2.0 * r.value;
  out.error = 2.0 * r.error;
  out.turning_points = {-x_t, x_t};
  out.allowed = {{0.0, x_t}};
  return out;
}

double wkb_energy(QuantumNumber n, const WKBConfig& cfg) {
  const double target = (n.value() + cfg.maslov_offset) * std::numbers::pi;
  if (!(target > 0.0)) throw DomainError("wkb_energy: (n + maslov_offset) must be positive");

  auto mismatch = [&](double e) { return action(e, cfg).action - target; };

  const double guess = spectrum::exact_energy(n);
  auto [lo, hi] = cfg.root_bracket.value_or(std::pair{4.0 * guess, 0.25 * guess});
  if (lo > hi) std::swap(lo, hi);
  if (!(hi < 0.0)) throw DomainError("wkb_energy: bracket must lie at negative energies");

  // Action grows as |E| shrinks, so mismatch(lo) < mismatch(hi).
  double f_lo = mismatch(lo);
  double f_hi = mismatch(hi);
  for (int i = 0; i < 60 && f_lo > 0.0; ++i) {
    lo *= 4.0;
    f_lo = mismatch(lo);
  }
  for (int i = 0; i < 60 && f_hi < 0.0; ++i) {
    hi *= 0.25;
    f_hi = mismatch(hi);
  }
  if (!(f_lo <= f_hi)) throw ConvergenceError("wkb_energy: non-monotone action", f_lo - f_hi);
  if (f_lo > 0.0 || f_hi < 0.0) {
    throw ConvergenceError("wkb_energy: root not bracketed", std::min(std::abs(f_lo), std::abs(f_hi)));
  }
  return roots::bracketed(mismatch, lo, hi, cfg.energy_tolerance).x;
}

ActionResult action_generic(double energy, const PotentialSpec& v, double rel_tol) {
  v.validate();
  if (!(energy < 0.0) || !std::isfinite(energy)) {
    throw DomainError("action_generic: energy must be negative");
  }
  if (!(energy > v.floor())) {
    throw DomainError("action_generic: energy below the potential floor");
  }

  // Every family satisfies V(x) >= -1/x, so nothing is allowed beyond 1/|E|.
  const double x_end = 2.0 / -energy;
  auto allowed_at = [&](double x) { return energy - evaluate(v, x) > 0.0; };

  bool inside = v.singular_at_origin() || energy > evaluate(v, 0.0);
  double start = 0.0;
  std::vector<std::pair<double, double>> intervals;

  constexpr int kScan = 4000;
  constexpr double kDecades = 14.0;
  double prev = 0.0;
  for (int i = 0; i <= kScan; ++i) {
    const double x = x_end * std::pow(10.0, -kDecades * (1.0 - static_cast<double>(i) / kScan));
    const bool now = allowed_at(x);
    if (now != inside) {
      auto g = [&](double y) { return energy - evaluate(v, y); };
      const double root = roots::bracketed(g, i == 0 ? 0.0 : prev, x, 1e-15).x;
      if (now) {
        start = root;
      } else {
        intervals.emplace_back(start, root);
      }
      inside = now;
    }
    prev = x;
  }
  if (inside) intervals.emplace_back(start, x_end);
  if (intervals.empty()) throw DomainError("action_generic: no classical turning points");

  ActionResult out;
  out.energy = energy;
  out.allowed = intervals;
  double total = 0.0;
  double error = 0.0;
  for (const auto& [lo, hi] : intervals) {
    const quad::Result r = interval_action(energy, v, lo, hi, 0.01 * rel_tol);
    if (!r.converged && r.error > rel_tol * std::abs(r.value)) {
      throw ConvergenceError("action_generic: quadrature did not converge", r.error);
    }
    total += r.value;
    error += r.error;
  }
  const double factor = v.symmetric() ? 2.0 : 1.0;
  out.action = factor * total;
  out.error = factor * error;
  const double outer = intervals.back().second;
  out.turning_points = v.symmetric() ? std::pair{-outer, outer}
                                     : std::pair{intervals.front().first, outer};
  return out;
}

}  // namespace hydro1d::wkb
