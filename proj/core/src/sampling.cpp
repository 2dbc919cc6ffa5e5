#include "dqm/sampling.hpp"

namespace dqm {

namespace {

std::complex<double> gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexMatrix gaussian_matrix(Eigen::Index d, std::mt19937_64& rng) {
  ComplexMatrix g(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) g(r, c) = gaussian(rng);
  }
  return g;
}

}  // namespace

HermitianOperator random_hermitian(Eigen::Index dimension, std::mt19937_64& rng) {
  const ComplexMatrix g = gaussian_matrix(dimension, rng);
  return HermitianOperator(0.5 * (g + g.adjoint()));
}

ComplexMatrix random_unitary(Eigen::Index dimension, std::mt19937_64& rng) {
  const ComplexMatrix g = gaussian_matrix(dimension, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return qr.householderQ() * ComplexMatrix::Identity(dimension, dimension);
}

HermitianOperator random_involution(Eigen::Index dimension, std::mt19937_64& rng) {
  const ComplexMatrix v = random_unitary(dimension, rng);
  Eigen::VectorXcd signs(dimension);
  for (Eigen::Index k = 0; k < dimension; ++k) signs[k] = (k % 2 == 0) ? 1.0 : -1.0;
  const ComplexMatrix h = v * signs.asDiagonal() * v.adjoint();
  return HermitianOperator(h, 1e-10);
}

ComplexVector random_vector(Eigen::Index dimension, std::mt19937_64& rng) {
  ComplexVector v(dimension);
  for (Eigen::Index k = 0; k < dimension; ++k) v[k] = gaussian(rng);
  return v;
}

LatticeState random_state(std::size_t size, double epsilon, std::mt19937_64& rng) {
  std::vector<Complex> amps(size);
  for (auto& a : amps) a = gaussian(rng);
  return LatticeState(std::move(amps), epsilon);
}

}  // namespace dqm
