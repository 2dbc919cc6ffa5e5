#pragma once

// Unitary evolution of the difference Schrodinger equation
//
//   (i / tau) (psi_{n+1} - psi_n) = H (psi_{n+1} + psi_n) / 2
//
// whose solution operator is the Cayley factor
//
//   C = (1 - i tau H / 2) (1 + i tau H / 2)^{-1},   U_n = C^n,
//
// plus the Heisenberg-picture difference schemes for A_n = U_n^dagger A_0 U_n.
// H is constant in time.

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace dqm {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Spectral (largest singular value) norm.
double operator_norm(const ComplexMatrix& m);

class HermitianOperator {
 public:
  /// Throws DomainError unless `matrix` is square and equals its conjugate
  /// transpose entrywise to `tolerance`.
  explicit HermitianOperator(ComplexMatrix matrix, double tolerance = 1e-12);

  Eigen::Index dimension() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

class CayleyPropagator {
 public:
  /// Throws DomainError for tau <= 0.
  CayleyPropagator(HermitianOperator hamiltonian, double tau);

  const HermitianOperator& hamiltonian() const noexcept { return hamiltonian_; }
  double tau() const noexcept { return tau_; }
  Eigen::Index dimension() const noexcept { return hamiltonian_.dimension(); }

  /// The one-step factor C.
  const ComplexMatrix& step() const noexcept { return step_; }
  /// Principal unitary square root of C.
  const ComplexMatrix& half_step() const noexcept { return half_step_; }

  /// Eigenvalues and eigenvectors of H, ascending.
  const Eigen::VectorXd& energies() const noexcept { return energies_; }
  const ComplexMatrix& eigenvectors() const noexcept { return eigenvectors_; }

  /// U at time n * tau. Negative n uses C^dagger.
  ComplexMatrix evolution(long n) const;
  /// U at time half_steps * tau / 2.
  ComplexMatrix half_evolution(long half_steps) const;

  /// g(H) = V diag(g(lambda)) V^dagger for a real function of the spectrum.
  template <class F>
  ComplexMatrix spectral_function(F&& g) const {
    ComplexVector values(energies_.size());
    for (Eigen::Index k = 0; k < energies_.size(); ++k) values[k] = g(energies_[k]);
    return eigenvectors_ * values.asDiagonal() * eigenvectors_.adjoint();
  }

 private:
  HermitianOperator hamiltonian_;
  double tau_;
  ComplexMatrix step_;
  ComplexMatrix half_step_;
  Eigen::VectorXd energies_;
  ComplexMatrix eigenvectors_;
};

/// exp(-i H t) by spectral decomposition; the continuum reference.
ComplexMatrix exact_propagator(const HermitianOperator& hamiltonian, double t);

/// C^n psi0.
ComplexVector evolve_state(const CayleyPropagator& propagator, const ComplexVector& psi0, long n);

/// psi_0, psi_1, ..., psi_n.
std::vector<ComplexVector> evolve_trajectory(const CayleyPropagator& propagator,
                                             const ComplexVector& psi0, long n);

/// Largest |(i/tau)(psi_{k+1} - psi_k) - H (psi_{k+1} + psi_k)/2| over the
/// consecutive pairs of a trajectory.
double schrodinger_residual(const CayleyPropagator& propagator,
                            const std::vector<ComplexVector>& trajectory);

/// || (i/tau)(U_{n+1} - U_n) - H (U_{n+1} + U_n)/2 ||.
double evolution_operator_residual(const CayleyPropagator& propagator, long n);

/// A_n = U_n^dagger A_0 U_n.
ComplexMatrix heisenberg_evolve(const CayleyPropagator& propagator, const ComplexMatrix& a0, long n);

/// Operator at a half-integer time: U_{k/2}^dagger A_0 U_{k/2}.
ComplexMatrix heisenberg_evolve_half(const CayleyPropagator& propagator, const ComplexMatrix& a0,
                                     long half_steps);

/// One row of a difference-scheme verification. `required` rows are exact
/// identities of the Cayley evolution; the others record alternative
/// readings of a printed formula, kept for comparison.
struct SchemeCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool required = true;
  /// Exponent e of (1 + tau^2/4) used by the checked form, when it has one.
  std::optional<double> exponent;
  /// Exponent e for which ||lhs - (1 + tau^2/4)^{-e} rhs|| is minimal,
  /// when the comparison is well-defined.
  std::optional<double> fitted_exponent;

  bool passed() const noexcept { return residual < tolerance; }
};

/// Forward, symmetric (half-step) and central schemes for a general H.
/// The central difference is checked in its derived form
///   (i/tau)(A_{n+1} - A_{n-1}) = 2 Q ([A,H] + (tau^2/4) H [A,H] H) Q,
/// Q = (1 + tau^2 H^2/4)^{-1}, with the scalar factor 2(1 - tau^2/4) and the
/// operator factor 2(1 - tau^2 H^2/4) reported as non-required rows.
std::vector<SchemeCheck> heisenberg_scheme_residuals(const CayleyPropagator& propagator,
                                                     const ComplexMatrix& a0, long n,
                                                     double tolerance = 1e-10);

/// The identities that hold when H^2 = 1. Throws DomainError if
/// ||H^2 - 1|| >= involution_tolerance.
std::vector<SchemeCheck> involution_identities(const HermitianOperator& hamiltonian,
                                               const ComplexMatrix& a0, double tau, long n,
                                               double tolerance = 1e-10,
                                               double involution_tolerance = 1e-12);

bool all_required_pass(const std::vector<SchemeCheck>& checks);

}  // namespace dqm
