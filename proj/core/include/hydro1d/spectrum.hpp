#pragma once

#include <optional>

namespace hydro1d {

enum class Parity { even, odd };

const char* to_string(Parity p);

/// Bound-state quantum number n >= 0.  Parity is (-1)^n.
class QuantumNumber {
 public:
  explicit QuantumNumber(int n);

  int value() const { return n_; }
  Parity parity() const { return n_ % 2 == 0 ? Parity::even : Parity::odd; }
  /// Whittaker index (n + 1) / 2.
  double kappa() const { return 0.5 * (n_ + 1); }

 private:
  int n_;
};

struct BoundState {
  QuantumNumber n;
  double energy;
  Parity parity;
  double norm;  // multiplies the unnormalized wavefunction
};

}  // namespace hydro1d

namespace hydro1d::spectrum {

/// E_n = -2 / (n + 1)^2 Hartree.
double exact_energy(QuantumNumber n);

/// Unnormalized sign(x)^n W_{(n+1)/2, 1/2}(4|x| / (n+1)).  At x = 0 this is
/// the finite limit 1/Gamma(1 - (n+1)/2) for even n and 0 for odd n.
double wavefunction(QuantumNumber n, double x);

/// Bound state whose norm makes the squared wavefunction integrate to one.
BoundState normalize(QuantumNumber n);

double normalized_wavefunction(const BoundState& s, double x);

/// Factor that would normalize x -> s.norm * wavefunction(s.n, x).  Equals 1
/// for a state returned by normalize().
double normalization_factor(const BoundState& s);

struct Window {
  double lo;
  double hi;
};

/// [-4 (n+1)^2, 4 (n+1)^2]; the classical turning point sits at (n+1)^2 / 2.
Window default_window(QuantumNumber n);

/// Strict sign changes of the sampled wavefunction.  Samples sit at half-step
/// offsets so x = 0 is never sampled; the odd-state node at the origin is
/// added by parity.  Throws DomainError when the window is asymmetric, the
/// sample count is below 1000 (n + 1), or a sign change falls in the outer 5%
/// of the window.
int node_count(QuantumNumber n, std::optional<Window> window = std::nullopt,
               std::optional<long> samples = std::nullopt);

/// |-psi''/2 - psi/|x| - E_n psi| with psi'' from a Richardson tableau of
/// central second differences.  Requires |x| >= 0.05.
double ode_residual(QuantumNumber n, double x);

/// [psi(h) - psi(0)] / h for even n, h in (0, 0.1].  Grows like log(1/h).
double cusp_indicator(QuantumNumber n, double h);

}  // namespace hydro1d::spectrum
