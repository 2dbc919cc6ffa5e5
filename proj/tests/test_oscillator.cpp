#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dqm/errors.hpp"
#include "dqm/hermite.hpp"
#include "dqm/kravchuk_wigner.hpp"
#include "dqm/oscillator.hpp"
#include "oracles.hpp"

namespace {

using dqm::OscillatorModel;

// Ladder matrices written out from their coefficients.
Eigen::MatrixXd lowering_by_hand(int big_n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(big_n + 1, big_n + 1);
  for (int n = 1; n <= big_n; ++n) a(n - 1, n) = std::sqrt(double(n) * (big_n - n + 1) / big_n);
  return a;
}

TEST(Oscillator, LadderMatricesMatchCoefficients) {
  for (int n : {1, 2, 7, 30}) {
    const OscillatorModel model(n);
    const Eigen::MatrixXd a = lowering_by_hand(n);
    EXPECT_LT((model.annihilation() - a).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((model.creation() - a.transpose()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Oscillator, ApplyMatchesMatrices) {
  const OscillatorModel model(9);
  Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(10, -1.0, 2.0);
  EXPECT_LT((model.apply_annihilation(v) - model.annihilation() * v).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((model.apply_creation(v) - model.creation() * v).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Oscillator, CommutatorAndAnticommutatorSpectra) {
  for (int n = 1; n <= 200; ++n) {
    const OscillatorModel model(n);
    EXPECT_LT(commutator_defect(model), 1e-10);
    EXPECT_LT(energy_defect(model), 1e-10);
    EXPECT_EQ(commutator_trace_numerator(model), 0);
    EXPECT_LT(std::abs(commutator_trace(model)), 1e-12);
  }
}

TEST(Oscillator, SpectraByHand) {
  const int big_n = 11;
  const double j = 0.5 * big_n;
  const Eigen::MatrixXd a = lowering_by_hand(big_n);
  const Eigen::MatrixXd comm = a * a.transpose() - a.transpose() * a;
  const Eigen::MatrixXd anti = a * a.transpose() + a.transpose() * a;
  const auto cs = commutator_spectrum(OscillatorModel(big_n));
  const auto es = energy_spectrum(OscillatorModel(big_n));
  for (int n = 0; n <= big_n; ++n) {
    EXPECT_NEAR(comm(n, n), 1.0 - n / j, 1e-14);
    EXPECT_NEAR(anti(n, n), 2.0 * n + 1.0 - n * n / j, 1e-13);
    EXPECT_NEAR(cs[n], 1.0 - n / j, 1e-15);
    EXPECT_NEAR(es[n], 2.0 * n + 1.0 - n * n / j, 1e-13);
  }
}

TEST(Oscillator, EnergySpectrumExample) {
  const auto es = energy_spectrum(OscillatorModel(2));
  ASSERT_EQ(es.size(), 3u);
  EXPECT_DOUBLE_EQ(es[0], 1.0);
  EXPECT_DOUBLE_EQ(es[1], 2.0);
  EXPECT_DOUBLE_EQ(es[2], 1.0);
}

TEST(Oscillator, HamiltonianScale) {
  const OscillatorModel model(6, 0.5, 3.0);
  const Eigen::MatrixXd a = lowering_by_hand(6);
  const Eigen::MatrixXd ref = 1.5 * (a * a.transpose() + a.transpose() * a);
  EXPECT_LT((model.hamiltonian() - ref).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Oscillator, PositionSpectrumExample) {
  const auto levels = position_spectrum(OscillatorModel(2));
  ASSERT_EQ(levels.eigenvalues.size(), 3);
  EXPECT_NEAR(levels.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(levels.eigenvalues[1], 0.0, 1e-14);
  EXPECT_NEAR(levels.eigenvalues[2], 1.0, 1e-14);
  EXPECT_EQ(levels.twice_m_prime, (std::vector<int>{-2, 0, 2}));
}

TEST(Oscillator, PositionSpectrumAndEigenvectors) {
  for (int n = 1; n <= 60; ++n) {
    const OscillatorModel model(n);
    EXPECT_LT(position_spectrum_defect(position_spectrum(model)), 1e-9);
    EXPECT_LT(position_eigenvector_residual(model), 1e-9);
  }
}

TEST(Oscillator, RotationColumnsDiagonalizePosition) {
  // Independent route: columns of exp(-i (pi/2) J_y) against X built by hand.
  for (int n : {1, 2, 5, 16}) {
    const Eigen::MatrixXd a = lowering_by_hand(n);
    const Eigen::MatrixXd x = (a + a.transpose()) / std::sqrt(2.0);
    const Eigen::MatrixXd d = oracle::wigner_from_jy(n, std::numbers::pi / 2.0);
    const double sj = std::sqrt(0.5 * n);
    for (int col = 0; col <= n; ++col) {
      const Eigen::VectorXd v = d.col(col);
      const double lambda = v.dot(x * v);
      EXPECT_LT((x * v - lambda * v).norm(), 1e-12);
      EXPECT_NEAR(std::abs(lambda) * sj, std::abs(0.5 * n - col), 1e-12);
    }
  }
}

TEST(Oscillator, CoefficientsDoNotDependOnP) {
  const OscillatorModel a(10, 0.5), b(10, 0.2);
  EXPECT_EQ(a.annihilation(), b.annihilation());
  EXPECT_LT(position_spectrum_defect(position_spectrum(b)), 1e-9);
  EXPECT_NEAR(b.beta(), 2.0 * std::asin(std::sqrt(0.2)), 1e-15);
}

TEST(Oscillator, GridMatchesScaling) {
  const OscillatorModel model(20, 0.3);
  EXPECT_NEAR(model.lattice_spacing(), 1.0 / std::sqrt(2.0 * 20 * 0.3 * 0.7), 1e-15);
  EXPECT_NEAR(model.grid_point(6), (6 - 20 * 0.3) * model.lattice_spacing(), 1e-14);
  const auto grid = dqm::continuum_grid(20, 0.3);
  ASSERT_EQ(grid.size(), 21u);
  EXPECT_NEAR(grid[10], model.grid_point(10), 1e-15);
}

TEST(Oscillator, LevelsApproachHermiteFunctions) {
  // Closed-form Hermite functions, sampled on the lattice grid.
  for (int level = 0; level <= 3; ++level) {
    for (int n : {64, 256}) {
      const OscillatorModel model(n);
      const dqm::WignerDMatrix d(n, std::numbers::pi / 2.0);
      Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
      c[level] = 1.0;
      std::vector<double> f = dqm::to_continuum(d, c, 0.5);
      const auto grid = dqm::continuum_grid(n, 0.5);
      std::vector<double> target(grid.size());
      for (std::size_t x = 0; x < grid.size(); ++x) target[x] = oracle::psi_explicit(level, grid[x]);
      dqm::align_sign(f, target);
      double err = 0.0;
      for (std::size_t x = 0; x < grid.size(); ++x) err = std::max(err, std::abs(f[x] - target[x]));
      EXPECT_LT(err, n == 64 ? 0.05 : 0.015) << "level=" << level << " N=" << n;
    }
  }
}

TEST(Oscillator, ContinuumConvergence) {
  const std::vector<int> sizes{16, 32, 64, 128, 256};
  for (int level = 0; level <= 3; ++level) {
    const auto table = dqm::continuum_convergence(level, sizes);
    ASSERT_EQ(table.rows.size(), sizes.size());
    EXPECT_TRUE(table.strictly_decreasing());
    EXPECT_GE(table.fitted_order(), 0.9);
  }
}

TEST(Oscillator, ContinuumConvergenceSkewedP) {
  const std::vector<int> sizes{32, 64, 128, 256};
  const auto table = dqm::continuum_convergence(1, sizes, 0.3);
  EXPECT_TRUE(table.strictly_decreasing());
  EXPECT_GT(table.fitted_order(), 0.5);
}

TEST(Oscillator, LadderLimitsDecrease) {
  const std::vector<int> sizes{16, 32, 64, 128, 256};
  for (int level = 0; level <= 3; ++level) {
    const auto rows = dqm::ladder_limit_check(level, sizes);
    ASSERT_EQ(rows.size(), sizes.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (level > 0) EXPECT_LT(rows[i].lowering_error, rows[i - 1].lowering_error);
      EXPECT_LT(rows[i].raising_error, rows[i - 1].raising_error);
    }
  }
}

TEST(Oscillator, LimitRecurrencesHoldOnLattice) {
  for (int level = 0; level <= 3; ++level) {
    const auto rec = dqm::limit_recurrence_check(OscillatorModel(64), level);
    EXPECT_LT(rec.three_term, 1e-9);
    EXPECT_LT(rec.difference, 1e-9);
  }
}

TEST(Oscillator, DifferenceRelationApproachesDerivative) {
  const double coarse = dqm::difference_continuum_error(OscillatorModel(64), 1);
  const double fine = dqm::difference_continuum_error(OscillatorModel(256), 1);
  EXPECT_LT(fine, coarse);
}

TEST(Oscillator, RejectsBadParameters) {
  EXPECT_THROW(OscillatorModel(0), dqm::DomainError);
  EXPECT_THROW(OscillatorModel(4, 1.0), dqm::DomainError);
  EXPECT_THROW(OscillatorModel(4, 0.5, -1.0), dqm::DomainError);
}

}  // namespace
