#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dqm/errors.hpp"
#include "dqm/planewave.hpp"
#include "dqm/sampling.hpp"
#include "oracles.hpp"

namespace {

using dqm::Complex;
using dqm::PlaneWaveBasis;

TEST(PlaneWave, MatchesBruteForceDft) {
  for (double eps : {0.1, 1.0, 10.0}) {
    for (std::size_t n = 1; n <= 64; ++n) {
      const PlaneWaveBasis basis(n, eps);
      double worst = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 0; m < n; ++m) worst = std::max(worst, std::abs(basis.entry(j, m) - oracle::dft_entry(j, m, n)));
      }
      EXPECT_LT(worst, 1e-12) << "N=" << n << " eps=" << eps;
    }
  }
}

TEST(PlaneWave, GramAndDftDefects) {
  for (double eps : {0.1, 1.0, 10.0}) {
    for (std::size_t n = 1; n <= 64; ++n) {
      const PlaneWaveBasis basis(n, eps);
      EXPECT_LT(basis.gram_defect(), 1e-12);
      EXPECT_LT(basis.dft_defect(), 1e-12);
    }
  }
}

TEST(PlaneWave, MomentaFollowTangentLaw) {
  const PlaneWaveBasis basis(6, 0.5);
  for (std::size_t m = 0; m < 6; ++m) {
    if (basis.is_singular(m)) {
      EXPECT_TRUE(std::isinf(basis.momentum(m)));
    } else {
      EXPECT_NEAR(basis.momentum(m), 4.0 * std::tan(std::numbers::pi * static_cast<double>(m) / 6.0), 1e-12);
    }
  }
  EXPECT_TRUE(basis.is_singular(3));
  EXPECT_FALSE(PlaneWaveBasis(5, 1.0).is_singular(2));
}

TEST(PlaneWave, SingularColumnAlternates) {
  const PlaneWaveBasis basis(8, 1.0);
  for (std::size_t j = 0; j < 8; ++j) {
    EXPECT_NEAR(std::abs(basis.entry(j, 4) - Complex((j % 2 ? -1.0 : 1.0) / std::sqrt(8.0))), 0.0, 1e-15);
  }
}

TEST(PlaneWave, MomentumEigenvalueExample) {
  const PlaneWaveBasis basis(4, 1.0);
  EXPECT_NEAR(basis.momentum(1), 2.0, 1e-15);
  EXPECT_NEAR(std::abs(basis.momentum_eigenvalue(1) - Complex(1.0, 1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(basis.momentum_eigenvalue(2) - Complex(0.0, 2.0)), 0.0, 1e-14);
}

TEST(PlaneWave, ColumnsAreForwardDifferenceEigenvectors) {
  for (std::size_t n : {3u, 4u, 7u, 16u}) {
    for (double eps : {0.1, 1.0, 10.0}) {
      const PlaneWaveBasis basis(n, eps);
      for (std::size_t m = 0; m < n; ++m) {
        const dqm::LatticeState col = basis.column(m);
        const dqm::LatticeState out = momentum_apply(basis, col);
        const Complex lambda = basis.momentum_eigenvalue(m);
        // Directly from the difference: -(i/eps)(f_{j+1} - f_j).
        for (std::size_t j = 0; j < n; ++j) {
          const Complex direct = Complex(0.0, -1.0 / eps) * (col[(j + 1) % n] - col[j]);
          EXPECT_NEAR(std::abs(out[j] - direct), 0.0, 1e-12);
          EXPECT_NEAR(std::abs(out[j] - lambda * col[j]), 0.0, 1e-10 * std::max(1.0, 1.0 / eps));
        }
      }
    }
  }
}

TEST(PlaneWave, RoundTripAndParseval) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 64; n += 7) {
    const PlaneWaveBasis basis(n, 1.0);
    for (int t = 0; t < 100; ++t) {
      const dqm::LatticeState f = dqm::random_state(n, 1.0, rng);
      const auto a = forward_transform(basis, f);
      const dqm::LatticeState g = inverse_transform(basis, a);
      double energy = 0.0;
      for (std::size_t m = 0; m < n; ++m) {
        energy += std::norm(a[m]);
        EXPECT_LT(std::abs(g[m] - f[m]), 1e-12);
      }
      EXPECT_NEAR(energy, f.norm_squared(), 1e-12 * f.norm_squared());
    }
  }
}

TEST(PlaneWave, ForwardTransformMatchesBruteForce) {
  std::mt19937_64 rng(4);
  const std::size_t n = 12;
  const PlaneWaveBasis basis(n, 0.7);
  const dqm::LatticeState f = dqm::random_state(n, 0.7, rng);
  const auto a = forward_transform(basis, f);
  for (std::size_t m = 0; m < n; ++m) {
    Complex ref = 0.0;
    for (std::size_t j = 0; j < n; ++j) ref += std::conj(oracle::dft_entry(j, m, n)) * f[j];
    EXPECT_LT(std::abs(a[m] - ref), 1e-12);
  }
}

TEST(PlaneWave, SymmetricMomentumIsSelfAdjointWithSineSpectrum) {
  const std::size_t n = 10;
  const double eps = 0.5;
  const PlaneWaveBasis basis(n, eps);
  for (std::size_t m = 0; m < n; ++m) {
    const dqm::LatticeState col = basis.column(m);
    const dqm::LatticeState out = dqm::symmetric_momentum_apply(col);
    const double lambda = std::sin(2.0 * std::numbers::pi * static_cast<double>(m) / n) / eps;
    for (std::size_t j = 0; j < n; ++j) EXPECT_LT(std::abs(out[j] - lambda * col[j]), 1e-12);
  }
  std::mt19937_64 rng(9);
  const auto f = dqm::random_state(n, eps, rng);
  const auto g = dqm::random_state(n, eps, rng);
  EXPECT_LT(std::abs(inner_product(f, dqm::symmetric_momentum_apply(g)) -
                     inner_product(dqm::symmetric_momentum_apply(f), g)), 1e-12);
}

TEST(PlaneWave, RejectsBadArguments) {
  EXPECT_THROW(PlaneWaveBasis(0, 1.0), dqm::DomainError);
  EXPECT_THROW(PlaneWaveBasis(4, 0.0), dqm::DomainError);
  const PlaneWaveBasis basis(4, 1.0);
  EXPECT_THROW(forward_transform(basis, dqm::LatticeState::kronecker(5, 0, 1.0)), dqm::SizeMismatchError);
  const std::vector<Complex> three(3);
  EXPECT_THROW(inverse_transform(basis, three), dqm::SizeMismatchError);
}

}  // namespace
