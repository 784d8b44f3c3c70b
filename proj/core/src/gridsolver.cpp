#include "hydro1d/gridsolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hydro1d/errors.hpp"

namespace hydro1d::grid {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Symmetric tridiagonal matrix: diag[0..n), off[0..n-1).
struct Tridiagonal {
  std::vector<double> diag;
  double off = 0.0;  // constant off-diagonal
};

// Number of eigenvalues strictly below lambda.
long sturm_count(const Tridiagonal& t, double lambda, double pivmin) {
  const double off2 = t.off * t.off;
  long count = 0;
  double q = t.diag[0] - lambda;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  const std::size_t n = t.diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    q = t.diag[i] - lambda - off2 / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> bisect_lowest(const Tridiagonal& t, int k_max, double rel_tol) {
  const double off = std::abs(t.off);
  double glo = std::numeric_limits<double>::infinity();
  double ghi = -glo;
  const std::size_t n = t.diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i == 0 || i + 1 == n) ? off : 2.0 * off;
    glo = std::min(glo, t.diag[i] - r);
    ghi = std::max(ghi, t.diag[i] + r);
  }
  const double norm = std::max(std::abs(glo), std::abs(ghi));
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, t.off * t.off);
  glo -= 2.0 * kEps * norm * n;
  ghi += 2.0 * kEps * norm * n;

  // Brackets shared across eigenvalues: every count narrows all of them.
  std::vector<double> lower(k_max, glo);
  std::vector<double> upper(k_max, ghi);
  std::vector<double> values(k_max);

  for (int k = 0; k < k_max; ++k) {
    double lo = lower[k];
    double hi = upper[k];
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double scale = std::max(std::abs(lo), std::abs(hi));
      if (hi - lo <= std::max(rel_tol * scale, 4.0 * kEps * scale) || mid <= lo || mid >= hi) {
        break;
      }
      const long c = sturm_count(t, mid, pivmin);
      for (int j = k; j < k_max; ++j) {
        if (j < c) {
          upper[j] = std::min(upper[j], mid);
        } else {
          lower[j] = std::max(lower[j], mid);
        }
      }
      lo = lower[k];
      hi = upper[k];
    }
    values[k] = 0.5 * (lo + hi);
  }
  return values;
}

// LU with partial pivoting of T - lambda I (LAPACK dgttrf layout), then
// repeated solves for inverse iteration.
class ShiftedFactor {
 public:
  ShiftedFactor(const Tridiagonal& t, double lambda, double norm) {
    const std::size_t n = t.diag.size();
    d_.resize(n);
    dl_.assign(n > 0 ? n - 1 : 0, t.off);
    du_.assign(n > 0 ? n - 1 : 0, t.off);
    du2_.assign(n > 1 ? n - 2 : 0, 0.0);
    swapped_.assign(n > 0 ? n - 1 : 0, 0);
    for (std::size_t i = 0; i < n; ++i) d_[i] = t.diag[i] - lambda;

    const double tiny = kEps * norm;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = tiny;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swapped_[i] = 1;
      }
    }
    if (n > 0 && d_[n - 1] == 0.0) d_[n - 1] = tiny;
  }

  void solve_in_place(std::vector<double>& b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped_[i]) {
        const double temp = b[i] - dl_[i] * b[i + 1];
        b[i] = b[i + 1];
        b[i + 1] = temp;
      } else {
        b[i + 1] -= dl_[i] * b[i];
      }
    }
    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (std::size_t ii = n - 2; ii-- > 0;) {
      b[ii] = (b[ii] - du_[ii] * b[ii + 1] - du2_[ii] * b[ii + 2]) / d_[ii];
    }
  }

 private:
  std::vector<double> d_, dl_, du_, du2_;
  std::vector<char> swapped_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void scale(std::vector<double>& v, double f) {
  for (double& x : v) x *= f;
}

double residual_norm(const Tridiagonal& t, double lambda, const std::vector<double>& v) {
  const std::size_t n = v.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (t.diag[i] - lambda) * v[i];
    if (i > 0) r += t.off * v[i - 1];
    if (i + 1 < n) r += t.off * v[i + 1];
    s += r * r;
  }
  return std::sqrt(s);
}

std::vector<double> inverse_iteration(const Tridiagonal& t, double lambda, double norm,
                                      const std::vector<std::vector<double>>& previous,
                                      const std::vector<double>& previous_values,
                                      int max_iter) {
  const std::size_t n = t.diag.size();
  const ShiftedFactor lu(t, lambda, norm);
  // Deterministic start with components of both parities.
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / static_cast<double>(n);
  scale(v, 1.0 / std::sqrt(dot(v, v)));

  const double cluster = 1e-6 * (std::abs(lambda) + 1.0);
  const double target = 1e3 * kEps * norm * std::sqrt(static_cast<double>(n));
  for (int it = 0; it < max_iter; ++it) {
    lu.solve_in_place(v);
    for (std::size_t j = 0; j < previous.size(); ++j) {
      if (std::abs(previous_values[j] - lambda) < cluster) {
        const double c = dot(v, previous[j]) / dot(previous[j], previous[j]);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * previous[j][i];
      }
    }
    const double len = std::sqrt(dot(v, v));
    if (!(len > 0.0) || !std::isfinite(len)) break;
    scale(v, 1.0 / len);
    if (it >= 1 && residual_norm(t, lambda, v) <= target) return v;
  }
  const double r = residual_norm(t, lambda, v);
  if (!(r <= target)) {
    throw ConvergenceError("inverse iteration did not converge", r);
  }
  return v;
}

int sign_changes(const std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  const double floor = 1e-10 * peak;
  int changes = 0;
  int prev = 0;
  for (double x : v) {
    if (std::abs(x) <= floor) continue;
    const int s = x > 0.0 ? 1 : -1;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

void fix_phase(std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  for (double x : v) {
    if (std::abs(x) > 1e-8 * peak) {
      if (x < 0.0) scale(v, -1.0);
      return;
    }
  }
}

}  // namespace

double Grid::spacing(bool half_line) const {
  return (half_line ? half_width : 2.0 * half_width) / static_cast<double>(points);
}

void Grid::validate(bool half_line) const {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("grid: half_width must be positive");
  }
  if (points < 4) throw DomainError("grid: need at least 4 points");
  if (staggered && !half_line && points % 2 != 0) {
    throw DomainError("grid: a staggered full-line mesh needs an even point count");
  }
}

std::vector<double> Grid::coordinates(bool half_line) const {
  validate(half_line);
  const double h = spacing(half_line);
  const double origin = half_line ? 0.0 : -half_width;
  std::vector<double> x;
  if (staggered) {
    x.resize(points);
    for (long j = 0; j < points; ++j) x[j] = origin + (static_cast<double>(j) + 0.5) * h;
    if (!half_line) {
      // Exact mirror symmetry.
      for (long j = 0; j < points / 2; ++j) x[points - 1 - j] = -x[j];
    }
  } else {
    x.resize(points - 1);
    for (long j = 1; j < points; ++j) x[j - 1] = origin + static_cast<double>(j) * h;
    if (!half_line) {
      for (long j = 0; j < (points - 1) / 2; ++j) x[points - 2 - j] = -x[j];
      if ((points - 1) % 2 == 1) x[(points - 1) / 2] = 0.0;
    }
  }
  return x;
}

Hamiltonian hamiltonian(const PotentialSpec& v) {
  v.validate();
  Hamiltonian h;
  h.potential = [v](double x) { return evaluate(v, x); };
  h.half_line = v.half_line_domain();
  h.singular_at_origin = v.singular_at_origin();
  h.symmetric = v.symmetric();
  h.label = describe(v);
  return h;
}

Hamiltonian harmonic_oscillator() {
  return {[](double x) { return 0.5 * x * x; }, false, false, true, "harmonic"};
}

Hamiltonian free_box() { return {[](double) { return 0.0; }, false, false, true, "box"}; }

const char* to_string(LevelParity p) {
  switch (p) {
    case LevelParity::even: return "even";
    case LevelParity::odd: return "odd";
    case LevelParity::none: break;
  }
  return "none";
}

SpectrumResult solve(const Hamiltonian& ham, const Grid& g, int k_max, const SolveOptions& opts) {
  g.validate(ham.half_line);
  if (ham.singular_at_origin && !g.staggered) {
    throw DomainError("grid: a potential singular at the origin needs a staggered mesh");
  }
  if (k_max < 1) throw DomainError("solve: k_max must be positive");

  std::vector<double> x = g.coordinates(ham.half_line);
  const std::size_t n = x.size();
  if (static_cast<long>(k_max) * 4 > static_cast<long>(n)) {
    throw DomainError("solve: k_max must not exceed N/4");
  }

  const double h = g.spacing(ham.half_line);
  const double inv_h2 = 1.0 / (h * h);
  Tridiagonal t;
  t.off = -0.5 * inv_h2;
  t.diag.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double v = ham.potential(x[j]);
    if (!std::isfinite(v)) {
      throw DomainError("solve: potential is not finite at x = " + std::to_string(x[j]));
    }
    t.diag[j] = inv_h2 + v;
  }
  if (g.staggered) {
    // Mirrored ghost: psi(wall - h/2) = -psi(wall + h/2) pins psi(wall) = 0.
    t.diag.front() += 0.5 * inv_h2;
    t.diag.back() += 0.5 * inv_h2;
  }

  double norm = 0.0;
  for (double d : t.diag) norm = std::max(norm, std::abs(d) + 2.0 * std::abs(t.off));

  const std::vector<double> values = bisect_lowest(t, k_max, opts.eigen_tolerance);

  SpectrumResult out;
  out.grid = g;
  out.potential = ham.label;
  std::vector<std::vector<double>> vectors;
  vectors.reserve(k_max);
  const bool mirror = ham.symmetric && !ham.half_line;

  for (int k = 0; k < k_max; ++k) {
    std::vector<double> v =
        inverse_iteration(t, values[k], norm, vectors, values, opts.max_inverse_iterations);
    fix_phase(v);
    scale(v, 1.0 / std::sqrt(dot(v, v) * h));

    Level level;
    level.index = k;
    level.energy = values[k];
    level.nodes = sign_changes(v);
    if (mirror) {
      double even = 0.0;
      double odd = 0.0;
      double len = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double r = v[n - 1 - i];
        even += (v[i] - r) * (v[i] - r);
        odd += (v[i] + r) * (v[i] + r);
        len += v[i] * v[i];
      }
      even = std::sqrt(even / len);
      odd = std::sqrt(odd / len);
      level.parity_residual = std::min(even, odd);
      if (level.parity_residual < 1e-6) {
        level.parity = even < odd ? LevelParity::even : LevelParity::odd;
      }
    }
    out.levels.push_back(level);
    vectors.push_back(std::move(v));
  }

  // Outermost grid point still classically allowed for the highest level.
  const double top = out.levels.back().energy;
  for (std::size_t j = 0; j < n; ++j) {
    if (ham.potential(x[j]) <= top) out.outer_turning_point = std::max(out.outer_turning_point, std::abs(x[j]));
  }
  out.wall_clearance = out.outer_turning_point > 0.0 ? g.half_width / out.outer_turning_point : 0.0;

  if (opts.keep_vectors) {
    out.x = std::move(x);
    out.vectors = std::move(vectors);
  }
  return out;
}

SpectrumResult solve(const PotentialSpec& v, const Grid& g, int k_max, const SolveOptions& opts) {
  SpectrumResult r = solve(hamiltonian(v), g, k_max, opts);
  r.spec = v;
  return r;
}

RefinementStudy refine(const Hamiltonian& ham, const Grid& g, int level, int refinements,
                       const SolveOptions& opts) {
  if (refinements < 1 || refinements > 4) {
    throw DomainError("refine: refinements must lie in [1, 4]");
  }
  if (level < 0) throw DomainError("refine: level must be non-negative");
  RefinementStudy study;
  Grid current = g;
  for (int i = 0; i <= refinements; ++i) {
    const SpectrumResult r = solve(ham, current, level + 1, opts);
    study.points.push_back(current.points);
    study.energies.push_back(r.levels[level].energy);
    current.points *= 2;
  }
  for (std::size_t i = 1; i + 1 < study.energies.size(); ++i) {
    const double coarse = study.energies[i] - study.energies[i - 1];
    const double fine = study.energies[i + 1] - study.energies[i];
    study.ratios.push_back(coarse / fine);
  }
  const double last = study.energies.back();
  const double prev = study.energies[study.energies.size() - 2];
  study.extrapolated = last + (last - prev) / 3.0;
  return study;
}

RefinementStudy refine(const PotentialSpec& v, const Grid& g, int level, int refinements,
                       const SolveOptions& opts) {
  return refine(hamiltonian(v), g, level, refinements, opts);
}

}  // namespace hydro1d::grid
