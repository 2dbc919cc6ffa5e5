#pragma once

// Seeded random operators and states for property sweeps. Everything is
// driven by an explicit std::mt19937_64 so a seed reproduces a sweep.

#include <random>

#include "dqm/cayley.hpp"
#include "dqm/lattice.hpp"

namespace dqm {

/// (G + G^dagger)/2 with standard normal complex entries.
HermitianOperator random_hermitian(Eigen::Index dimension, std::mt19937_64& rng);

/// Haar-like unitary from the QR factorization of a complex Gaussian matrix.
ComplexMatrix random_unitary(Eigen::Index dimension, std::mt19937_64& rng);

/// V diag(+-1) V^dagger with both signs present when dimension >= 2.
HermitianOperator random_involution(Eigen::Index dimension, std::mt19937_64& rng);

/// Complex Gaussian amplitudes. Not normalized.
ComplexVector random_vector(Eigen::Index dimension, std::mt19937_64& rng);
LatticeState random_state(std::size_t size, double epsilon, std::mt19937_64& rng);

}  // namespace dqm
