#include "hydro1d/gridsolver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hydro1d/errors.hpp"
#include "hydro1d/spectrum.hpp"

namespace {

using hydro1d::DomainError;
using hydro1d::PotentialSpec;
using hydro1d::QuantumNumber;
namespace grid = hydro1d::grid;
constexpr double kPi = std::numbers::pi;

TEST(Grid, StaggeredMeshAvoidsOrigin) {
  const grid::Grid g{1.0, 10, true};
  const auto x = g.coordinates(false);
  ASSERT_EQ(x.size(), 10u);
  EXPECT_DOUBLE_EQ(g.spacing(false), 0.2);
  EXPECT_DOUBLE_EQ(x.front(), -0.9);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_NE(x[i], 0.0);
    EXPECT_EQ(x[i], -x[x.size() - 1 - i]);
  }
  const auto half = g.coordinates(true);
  EXPECT_DOUBLE_EQ(half.front(), 0.05);
  EXPECT_DOUBLE_EQ(half.back(), 0.95);
}

TEST(Grid, Validation) {
  EXPECT_THROW((grid::Grid{1.0, 11, true}.validate(false)), DomainError);
  EXPECT_NO_THROW((grid::Grid{1.0, 11, true}.validate(true)));
  EXPECT_THROW((grid::Grid{0.0, 100, true}.validate(false)), DomainError);
  EXPECT_THROW((grid::Grid{1.0, 2, true}.validate(false)), DomainError);
}

TEST(Solve, HarmonicOscillatorLevels) {
  const auto r = grid::solve(grid::harmonic_oscillator(), {12.0, 4000, true}, 4);
  ASSERT_EQ(r.levels.size(), 4u);
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(r.levels[k].energy, k + 0.5, 1e-4) << k;
    EXPECT_EQ(r.levels[k].nodes, k);
    EXPECT_EQ(r.levels[k].parity, k % 2 == 0 ? grid::LevelParity::even : grid::LevelParity::odd);
  }
}

TEST(Solve, ParticleInBox) {
  const auto r = grid::solve(grid::free_box(), {1.0, 2000, true}, 2);
  EXPECT_NEAR(r.levels[0].energy, kPi * kPi / 8.0, 1e-3);
  EXPECT_NEAR(r.levels[1].energy, kPi * kPi / 2.0, 1e-3);

  const auto nodal = grid::solve(grid::free_box(), {1.0, 2000, false}, 2);
  EXPECT_NEAR(nodal.levels[0].energy, kPi * kPi / 8.0, 1e-3);
}

TEST(Solve, HalfLineCoulombGroundLevel) {
  const auto r = grid::solve(PotentialSpec::half_line(), {60.0, 12000, true}, 2);
  EXPECT_LE(std::abs(r.levels[0].energy / -0.5 - 1.0), 0.005);
  EXPECT_EQ(r.levels[0].parity, grid::LevelParity::none);
  ASSERT_TRUE(r.spec.has_value());
}

TEST(Solve, EigenvectorsAreNormalizedInDiscreteNorm) {
  grid::SolveOptions opts;
  opts.keep_vectors = true;
  const grid::Grid g{10.0, 2000, true};
  const auto r = grid::solve(grid::harmonic_oscillator(), g, 3, opts);
  ASSERT_EQ(r.vectors.size(), 3u);
  const double h = g.spacing(false);
  for (const auto& v : r.vectors) {
    double s = 0.0;
    for (double c : v) s += c * c * h;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
  // Ground state against the Gaussian pi^{-1/4} e^{-x^2/2}.
  const std::size_t mid = r.x.size() / 2;
  EXPECT_NEAR(r.vectors[0][mid], std::pow(kPi, -0.25) * std::exp(-0.5 * r.x[mid] * r.x[mid]), 1e-4);
}

TEST(Solve, SturmPropertyAcrossPotentials) {
  const std::vector<std::pair<grid::Hamiltonian, grid::Grid>> cases = {
      {grid::harmonic_oscillator(), {10.0, 2000, true}},
      {grid::hamiltonian(PotentialSpec::soft_core(0.1)), {40.0, 8000, true}},
      {grid::hamiltonian(PotentialSpec::repulsive_core(0.05, 0.1)), {40.0, 8000, true}},
      {grid::hamiltonian(PotentialSpec::half_line()), {60.0, 6000, true}},
      {grid::hamiltonian(PotentialSpec::pure_coulomb()), {60.0, 12000, true}},
  };
  for (const auto& [ham, g] : cases) {
    const auto r = grid::solve(ham, g, 7);
    for (int k = 0; k < 7; ++k) {
      EXPECT_EQ(r.levels[k].nodes, k) << ham.label << " k=" << k;
      if (k > 0) EXPECT_GT(r.levels[k].energy, r.levels[k - 1].energy) << ham.label;
    }
  }
}

TEST(Solve, ParityAlternatesForSymmetricPotentials) {
  const auto r = grid::solve(PotentialSpec::soft_core(0.1), {30.0, 6000, true}, 6);
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(r.levels[k].parity, k % 2 == 0 ? grid::LevelParity::even : grid::LevelParity::odd);
    EXPECT_LE(r.levels[k].parity_residual, 1e-8) << k;
  }
}

TEST(Solve, EnlargingTheBoxNeverRaisesEnergies) {
  const double h = 0.01;
  const auto small = grid::solve(PotentialSpec::soft_core(0.1), {30.0, static_cast<long>(60.0 / h), true}, 4);
  const auto large = grid::solve(PotentialSpec::soft_core(0.1), {60.0, static_cast<long>(120.0 / h), true}, 4);
  for (int k = 0; k < 4; ++k) {
    EXPECT_LE(large.levels[k].energy - small.levels[k].energy, 1e-10) << k;
  }
}

TEST(Solve, SoftCoreOddLevelsApproachExactSpectrum) {
  const double a = 1e-3;
  const auto r = grid::solve(PotentialSpec::soft_core(a), {30.0, 300000, true}, 4);
  EXPECT_EQ(r.levels[1].parity, grid::LevelParity::odd);
  EXPECT_EQ(r.levels[3].parity, grid::LevelParity::odd);
  const double e1 = hydro1d::spectrum::exact_energy(QuantumNumber(1));
  const double e3 = hydro1d::spectrum::exact_energy(QuantumNumber(3));
  EXPECT_LE(std::abs(r.levels[1].energy / e1 - 1.0), 0.01);
  EXPECT_LE(std::abs(r.levels[3].energy / e3 - 1.0), 0.01);
}

TEST(Solve, ReportsWallClearance) {
  const auto harmonic = grid::solve(grid::harmonic_oscillator(), {12.0, 2000, true}, 4);
  EXPECT_NEAR(harmonic.outer_turning_point, std::sqrt(7.0), 0.012);  // one grid spacing
  EXPECT_GE(harmonic.wall_clearance, grid::kWallClearance);

  // Level 5 of pure Coulomb sits near -1/18 with turning point ~18.
  const auto coulomb = grid::solve(PotentialSpec::pure_coulomb(), {30.0, 6000, true}, 6);
  EXPECT_LT(coulomb.wall_clearance, grid::kWallClearance);
}

TEST(Solve, Preconditions) {
  EXPECT_THROW(grid::solve(grid::harmonic_oscillator(), {10.0, 100, true}, 26), DomainError);
  EXPECT_THROW(grid::solve(grid::harmonic_oscillator(), {10.0, 100, true}, 0), DomainError);
  EXPECT_THROW(grid::solve(PotentialSpec::pure_coulomb(), {10.0, 100, false}, 2), DomainError);
  EXPECT_THROW(grid::solve(PotentialSpec::half_line(), {10.0, 100, false}, 2), DomainError);
}

TEST(Refine, HarmonicConvergesAtSecondOrder) {
  const auto study = grid::refine(grid::harmonic_oscillator(), {12.0, 1000, true}, 0, 3);
  ASSERT_EQ(study.energies.size(), 4u);
  for (std::size_t i = 0; i + 1 < study.energies.size(); ++i) {
    const double ratio = (study.energies[i] - 0.5) / (study.energies[i + 1] - 0.5);
    EXPECT_GE(ratio, 3.5);
    EXPECT_LE(ratio, 4.5);
  }
  for (double r : study.ratios) {
    EXPECT_GE(r, 3.5);
    EXPECT_LE(r, 4.5);
  }
}

TEST(Refine, SoftCoreSequenceIsMonotone) {
  const auto study = grid::refine(PotentialSpec::soft_core(0.1), {30.0, 3000, true}, 1, 3);
  const double first_step = study.energies[1] - study.energies[0];
  double previous_step = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < study.energies.size(); ++i) {
    const double step = study.energies[i] - study.energies[i - 1];
    EXPECT_GT(step * first_step, 0.0) << i;
    EXPECT_LT(std::abs(step), std::abs(previous_step)) << i;
    previous_step = step;
  }
}

TEST(Refine, BoxExtrapolatesToAnalyticValue) {
  const auto study = grid::refine(grid::free_box(), {1.0, 2000, true}, 0, 2);
  EXPECT_NEAR(study.extrapolated, kPi * kPi / 8.0, 1e-6);
}

TEST(Refine, RejectsTooManyRefinements) {
  EXPECT_THROW(grid::refine(grid::free_box(), {1.0, 100, true}, 0, 5), DomainError);
  EXPECT_THROW(grid::refine(grid::free_box(), {1.0, 100, true}, 0, 0), DomainError);
}

}  // namespace
