#pragma once

// Tangent-lattice plane waves
//
//   k_m    = (2 / eps) tan(pi m / N)
//   f_j(m) = N^{-1/2} ((1 + i eps k_m / 2) / (1 - i eps k_m / 2))^j
//
// for j, m = 0..N-1, together with the finite Fourier pair they define and
// the forward-difference momentum operator -(i / eps) Delta.
//
// For even N the column m = N/2 sits at tan(pi/2). Its momentum is stored as
// +infinity and its entries take the finite limit (-1)^j / sqrt(N), which
// keeps the table unitary for every N.

#include <cstddef>
#include <span>
#include <vector>

#include "dqm/lattice.hpp"

namespace dqm {

class PlaneWaveBasis {
 public:
  PlaneWaveBasis(std::size_t size, double epsilon);

  std::size_t size() const noexcept { return size_; }
  double epsilon() const noexcept { return epsilon_; }

  /// k_m, or +infinity on the even-N singular column.
  double momentum(std::size_t m) const { return momenta_.at(m); }
  std::span<const double> momenta() const noexcept { return momenta_; }
  bool is_singular(std::size_t m) const noexcept { return 2 * m == size_; }

  /// f_j(k_m).
  Complex entry(std::size_t j, std::size_t m) const { return table_[j * size_ + m]; }
  LatticeState column(std::size_t m) const;

  /// Eigenvalue of -(i/eps) Delta on column m: k_m / (1 - i eps k_m / 2).
  /// The singular column gives its limit 2i / eps.
  Complex momentum_eigenvalue(std::size_t m) const;

  /// max |(F^dagger F)_{mm'} - delta_{mm'}|.
  double gram_defect() const;
  /// max |f_j(k_m) - exp(2 pi i j m / N) / sqrt(N)|.
  double dft_defect() const;

 private:
  std::size_t size_;
  double epsilon_;
  std::vector<double> momenta_;
  std::vector<Complex> table_;  // row-major, index j * N + m
};

inline PlaneWaveBasis build_basis(std::size_t size, double epsilon) {
  return PlaneWaveBasis(size, epsilon);
}

/// a_m = sum_j conj(f_j(k_m)) F_j.
std::vector<Complex> forward_transform(const PlaneWaveBasis& basis, const LatticeState& state);

/// F_j = sum_m a_m f_j(k_m).
LatticeState inverse_transform(const PlaneWaveBasis& basis, std::span<const Complex> coefficients);

/// -(i / eps) Delta f with periodic boundary. Not self-adjoint.
LatticeState momentum_apply(const PlaneWaveBasis& basis, const LatticeState& state);

/// -(i / 2 eps)(Delta + nabla) f with periodic boundary. This symmetrized
/// form is self-adjoint, with real eigenvalues sin(2 pi m / N) / eps on the
/// basis columns. It is an extension beside the forward-difference operator.
LatticeState symmetric_momentum_apply(const LatticeState& state);

}  // namespace dqm
