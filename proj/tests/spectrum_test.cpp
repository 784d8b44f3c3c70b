#include "hydro1d/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hydro1d/errors.hpp"

namespace {

using hydro1d::DomainError;
using hydro1d::Parity;
using hydro1d::QuantumNumber;
namespace sp = hydro1d::spectrum;

QuantumNumber q(int n) { return QuantumNumber(n); }

TEST(QuantumNumber, ParityAndValidation) {
  EXPECT_EQ(q(0).parity(), Parity::even);
  EXPECT_EQ(q(7).parity(), Parity::odd);
  EXPECT_DOUBLE_EQ(q(3).kappa(), 2.0);
  EXPECT_THROW(QuantumNumber(-1), DomainError);
}

TEST(ExactEnergy, BalmerLevels) {
  EXPECT_EQ(sp::exact_energy(q(0)), -2.0);
  EXPECT_EQ(sp::exact_energy(q(1)), -0.5);
  EXPECT_DOUBLE_EQ(sp::exact_energy(q(2)), -2.0 / 9.0);
}

TEST(ExactEnergy, OddLevelsAreThreeDimensionalHydrogen) {
  for (int k = 1; k <= 10; ++k) {
    EXPECT_DOUBLE_EQ(sp::exact_energy(q(2 * k - 1)), -1.0 / (2.0 * k * k));
  }
}

TEST(Wavefunction, OriginValues) {
  EXPECT_NEAR(sp::wavefunction(q(0), 0.0), 0.5641896, 5e-8);
  EXPECT_NEAR(sp::wavefunction(q(2), 0.0), -0.2820948, 5e-8);
  EXPECT_NEAR(sp::wavefunction(q(2), 0.0), -1.0 / (2.0 * std::sqrt(std::numbers::pi)), 1e-15);
  EXPECT_EQ(sp::wavefunction(q(1), 0.0), 0.0);
  EXPECT_EQ(sp::wavefunction(q(5), 0.0), 0.0);
}

TEST(Wavefunction, FirstExcitedIsTwoXExpMinusAbsX) {
  for (double x = -12.0; x <= 12.0; x += 0.37) {
    if (x == 0.0) continue;
    const double ratio = sp::wavefunction(q(1), x) / (x * std::exp(-std::abs(x)));
    EXPECT_NEAR(ratio, 2.0, 1e-12) << x;
  }
}

TEST(Wavefunction, ThirdExcitedFromLaguerreReduction) {
  // psi_3 = sign(x) e^{-|x|/2} |x| (|x| - 2), hand-reduced from
  // W_{2,1/2}(z) = -e^{-z/2} z L_1^(1)(z) = e^{-z/2} z (z - 2) with z = |x|.
  for (double x : {-7.0, -1.5, 0.3, 2.0, 4.5}) {
    const double r = std::abs(x);
    const double want = (x < 0 ? -1.0 : 1.0) * std::exp(-0.5 * r) * r * (r - 2.0);
    EXPECT_NEAR(sp::wavefunction(q(3), x), want, 1e-13) << x;
  }
}

TEST(Wavefunction, ParityIsExact) {
  for (int n = 0; n <= 10; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    for (int i = 0; i < 100; ++i) {
      const double x = 0.01 + (20.0 - 0.01) * i / 99.0;
      EXPECT_EQ(sp::wavefunction(q(n), -x), sign * sp::wavefunction(q(n), x)) << n << " " << x;
    }
  }
}

TEST(Wavefunction, RejectsNonFinite) {
  EXPECT_THROW(sp::wavefunction(q(0), std::nan("")), DomainError);
}

TEST(Normalize, AnalyticFirstExcitedState) {
  // Int (2 x e^{-|x|})^2 dx = 8 Int_0^inf x^2 e^{-2x} dx = 8 * 2!/2^3 = 2.
  const auto s = sp::normalize(q(1));
  EXPECT_NEAR(s.norm, 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(s.parity, Parity::odd);
}

TEST(Normalize, EvenStatesAgainstReference) {
  // Arbitrary-precision quadrature of W^2.
  EXPECT_NEAR(sp::normalize(q(0)).norm, 1.185939299139138555, 1e-10);
  EXPECT_NEAR(sp::normalize(q(2)).norm, 0.43532709315370284802, 1e-10);
  EXPECT_NEAR(sp::normalize(q(4)).norm, 0.13463773485237093037, 1e-10);
  EXPECT_EQ(sp::normalize(q(0)).energy, -2.0);
}

TEST(Normalize, PositiveAndIdempotent) {
  for (int n = 0; n <= 10; ++n) {
    const auto s = sp::normalize(q(n));
    EXPECT_GT(s.norm, 0.0);
    EXPECT_NEAR(sp::normalization_factor(s), 1.0, 1e-10) << n;
  }
}

TEST(NodeCount, MatchesQuantumNumber) {
  EXPECT_EQ(sp::node_count(q(0)), 0);
  EXPECT_EQ(sp::node_count(q(1)), 1);
  EXPECT_EQ(sp::node_count(q(2)), 2);
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(sp::node_count(q(n)), n) << n;
}

TEST(NodeCount, DetectsInsufficientWindowAndSampling) {
  // Locate the positive node of psi_2 by bisection, then squeeze the window
  // so it falls in the outer 5%.
  double lo = 0.1;
  double hi = 2.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (sp::wavefunction(q(2), mid) < 0.0 ? lo : hi) = mid;
  }
  const double node = 0.5 * (lo + hi);
  const double edge = node / 0.97;
  EXPECT_THROW(sp::node_count(q(2), sp::Window{-edge, edge}, 3000), DomainError);
  EXPECT_THROW(sp::node_count(q(2), std::nullopt, 2999), DomainError);
  EXPECT_THROW(sp::node_count(q(2), sp::Window{-5.0, 6.0}, 3000), DomainError);
}

TEST(OdeResidual, DocumentedPoints) {
  EXPECT_LE(sp::ode_residual(q(1), 1.0), 1e-6);
  EXPECT_LE(sp::ode_residual(q(0), 0.5), 1e-6);
  EXPECT_LE(sp::ode_residual(q(3), 2.0), 1e-6);
}

TEST(OdeResidual, RejectsPointsNearTheCusp) {
  EXPECT_THROW(sp::ode_residual(q(0), 0.0), DomainError);
  EXPECT_THROW(sp::ode_residual(q(0), 0.01), DomainError);
}

TEST(OdeResidual, WrongEnergyIsDetected) {
  // Sanity check on the residual itself: a Whittaker function with the
  // wrong index does not satisfy the equation at E_n.
  const double x = 1.3;
  const double h = 1e-4;
  auto psi = [](double t) { return sp::wavefunction(q(2), t); };
  const double d2 = (psi(x + h) - 2.0 * psi(x) + psi(x - h)) / (h * h);
  const double bad = std::abs(-0.5 * d2 - psi(x) / x - sp::exact_energy(q(0)) * psi(x));
  EXPECT_GT(bad, 1e-2);
}

TEST(CuspIndicator, DivergesTowardOrigin) {
  const double coarse = sp::cusp_indicator(q(0), 1e-2);
  const double fine = sp::cusp_indicator(q(0), 1e-3);
  EXPECT_GT(std::abs(fine), std::abs(coarse));
  EXPECT_GT(std::abs(sp::cusp_indicator(q(0), 1e-4)), std::abs(fine));

  const double excited = sp::cusp_indicator(q(2), 1e-3);
  EXPECT_TRUE(std::isfinite(excited));
  EXPECT_GT(std::abs(excited), std::abs(sp::cusp_indicator(q(2), 1e-2)));
}

TEST(CuspIndicator, Preconditions) {
  EXPECT_THROW(sp::cusp_indicator(q(1), 1e-3), DomainError);
  EXPECT_THROW(sp::cusp_indicator(q(0), 0.0), DomainError);
  EXPECT_THROW(sp::cusp_indicator(q(0), 0.2), DomainError);
}

double decay_slope(int n, bool strip_power_law) {
  const double x1 = 20.0 * (n + 1);
  const double x2 = 40.0 * (n + 1);
  auto g = [&](double x) {
    double v = std::log(std::abs(sp::wavefunction(q(n), x)));
    if (strip_power_law) v -= q(n).kappa() * std::log(x);
    return v;
  };
  return (g(x2) - g(x1)) / (x2 - x1);
}

TEST(DecayRate, RawSlopeForLowestStates) {
  for (int n : {0, 1}) {
    const double want = -2.0 / (n + 1);
    EXPECT_LE(std::abs(decay_slope(n, false) / want - 1.0), 0.02) << n;
  }
}

TEST(DecayRate, ExponentAfterRemovingPowerLawPrefactor) {
  // The Whittaker tail is z^kappa e^{-z/2}; the exponential rate is
  // sqrt(2|E_n|) = 2/(n+1) for every n once the power law is removed.
  for (int n = 0; n <= 10; ++n) {
    const double want = -std::sqrt(-2.0 * sp::exact_energy(q(n)));
    EXPECT_NEAR(want, -2.0 / (n + 1), 1e-15);
    EXPECT_LE(std::abs(decay_slope(n, true) / want - 1.0), 0.02) << n;
  }
}

}  // namespace
