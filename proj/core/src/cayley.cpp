#include "dqm/cayley.hpp"

#include <algorithm>
#include <cmath>

#include "dqm/errors.hpp"

namespace dqm {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

void require_square(const ComplexMatrix& a, Eigen::Index d, const char* what) {
  if (a.rows() != d || a.cols() != d) {
    throw SizeMismatchError(std::string(what) + ": operator dimension does not match H");
  }
}

// Scalar c minimizing ||lhs - c * rhs||_F, mapped to the exponent e with
// c = (1 + tau^2/4)^{-e}.
std::optional<double> fit_exponent(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double tau) {
  const double rhs_norm2 = rhs.squaredNorm();
  const double base = std::log1p(0.25 * tau * tau);
  if (rhs_norm2 < 1e-24 || base <= 0.0) return std::nullopt;
  const double c = (rhs.adjoint() * lhs).trace().real() / rhs_norm2;
  if (!(c > 0.0)) return std::nullopt;
  return -std::log(c) / base;
}

SchemeCheck make_check(std::string name, const ComplexMatrix& lhs, const ComplexMatrix& rhs,
                       double tolerance, bool required) {
  SchemeCheck check;
  check.name = std::move(name);
  check.residual = operator_norm(lhs - rhs);
  check.tolerance = tolerance;
  check.required = required;
  return check;
}

// Check of lhs = (1 + tau^2/4)^{-exponent} * core, recording the fitted exponent.
SchemeCheck make_scaled_check(std::string name, const ComplexMatrix& lhs, const ComplexMatrix& core,
                              double tau, double exponent, double tolerance, bool required) {
  const double scale = std::pow(1.0 + 0.25 * tau * tau, -exponent);
  SchemeCheck check = make_check(std::move(name), lhs, scale * core, tolerance, required);
  check.exponent = exponent;
  check.fitted_exponent = fit_exponent(lhs, core, tau);
  return check;
}

}  // namespace

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

HermitianOperator::HermitianOperator(ComplexMatrix matrix, double tolerance) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw DomainError("HermitianOperator: matrix must be square and non-empty");
  }
  const double defect = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (!(defect <= tolerance)) {
    throw DomainError("HermitianOperator: matrix is not Hermitian (defect " +
                      std::to_string(defect) + ")");
  }
  matrix_ = 0.5 * (matrix + matrix.adjoint());
}

CayleyPropagator::CayleyPropagator(HermitianOperator hamiltonian, double tau)
    : hamiltonian_(std::move(hamiltonian)), tau_(tau) {
  if (!(tau_ > 0.0) || !std::isfinite(tau_)) {
    throw DomainError("CayleyPropagator: tau must be positive and finite");
  }
  const Eigen::Index d = hamiltonian_.dimension();
  const ComplexMatrix half_h = (0.5 * tau_) * hamiltonian_.matrix();
  const ComplexMatrix plus = identity(d) + kI * half_h;
  const ComplexMatrix minus = identity(d) - kI * half_h;
  // (1 + i tau H / 2) C = (1 - i tau H / 2); the two factors commute.
  step_ = plus.partialPivLu().solve(minus);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hamiltonian_.matrix());
  energies_ = eig.eigenvalues();
  eigenvectors_ = eig.eigenvectors();
  // Eigenphase of C is -2 atan(tau lambda / 2), inside (-pi, pi); the
  // principal root halves it.
  half_step_ = spectral_function([tau = tau_](double lambda) {
    return std::polar(1.0, -std::atan(0.5 * tau * lambda));
  });
}

ComplexMatrix CayleyPropagator::evolution(long n) const {
  const ComplexMatrix factor = n >= 0 ? step_ : ComplexMatrix(step_.adjoint());
  ComplexMatrix u = identity(dimension());
  for (long k = 0; k < std::labs(n); ++k) u = factor * u;
  return u;
}

ComplexMatrix CayleyPropagator::half_evolution(long half_steps) const {
  const ComplexMatrix factor = half_steps >= 0 ? half_step_ : ComplexMatrix(half_step_.adjoint());
  ComplexMatrix u = identity(dimension());
  for (long k = 0; k < std::labs(half_steps); ++k) u = factor * u;
  return u;
}

ComplexMatrix exact_propagator(const HermitianOperator& hamiltonian, double t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hamiltonian.matrix());
  ComplexVector phases(eig.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases[k] = std::polar(1.0, -eig.eigenvalues()[k] * t);
  }
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

std::vector<ComplexVector> evolve_trajectory(const CayleyPropagator& propagator,
                                             const ComplexVector& psi0, long n) {
  if (psi0.size() != propagator.dimension()) {
    throw SizeMismatchError("evolve: state dimension does not match H");
  }
  if (n < 0) throw DomainError("evolve: step count must be non-negative");
  std::vector<ComplexVector> trajectory;
  trajectory.reserve(static_cast<std::size_t>(n) + 1);
  trajectory.push_back(psi0);
  for (long k = 0; k < n; ++k) trajectory.push_back(propagator.step() * trajectory.back());
  return trajectory;
}

ComplexVector evolve_state(const CayleyPropagator& propagator, const ComplexVector& psi0, long n) {
  return evolve_trajectory(propagator, psi0, n).back();
}

double schrodinger_residual(const CayleyPropagator& propagator,
                            const std::vector<ComplexVector>& trajectory) {
  const ComplexMatrix& h = propagator.hamiltonian().matrix();
  const std::complex<double> lead = kI / propagator.tau();
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < trajectory.size(); ++k) {
    const ComplexVector r = lead * (trajectory[k + 1] - trajectory[k]) -
                            h * (0.5 * (trajectory[k + 1] + trajectory[k]));
    worst = std::max(worst, r.norm());
  }
  return worst;
}

double evolution_operator_residual(const CayleyPropagator& propagator, long n) {
  const ComplexMatrix u_n = propagator.evolution(n);
  const ComplexMatrix u_next = propagator.step() * u_n;
  const ComplexMatrix r = (kI / propagator.tau()) * (u_next - u_n) -
                          propagator.hamiltonian().matrix() * (0.5 * (u_next + u_n));
  return operator_norm(r);
}

ComplexMatrix heisenberg_evolve(const CayleyPropagator& propagator, const ComplexMatrix& a0, long n) {
  require_square(a0, propagator.dimension(), "heisenberg_evolve");
  const ComplexMatrix u = propagator.evolution(n);
  return u.adjoint() * a0 * u;
}

ComplexMatrix heisenberg_evolve_half(const CayleyPropagator& propagator, const ComplexMatrix& a0,
                                     long half_steps) {
  require_square(a0, propagator.dimension(), "heisenberg_evolve_half");
  const ComplexMatrix u = propagator.half_evolution(half_steps);
  return u.adjoint() * a0 * u;
}

std::vector<SchemeCheck> heisenberg_scheme_residuals(const CayleyPropagator& propagator,
                                                     const ComplexMatrix& a0, long n,
                                                     double tolerance) {
  require_square(a0, propagator.dimension(), "heisenberg_scheme_residuals");
  const double tau = propagator.tau();
  const ComplexMatrix& h = propagator.hamiltonian().matrix();
  const std::complex<double> lead = kI / tau;

  const ComplexMatrix a_prev = heisenberg_evolve(propagator, a0, n - 1);
  const ComplexMatrix a_n = heisenberg_evolve(propagator, a0, n);
  const ComplexMatrix a_next = heisenberg_evolve(propagator, a0, n + 1);
  const ComplexMatrix a_half_next = heisenberg_evolve_half(propagator, a0, 2 * n + 1);
  const ComplexMatrix a_half_prev = heisenberg_evolve_half(propagator, a0, 2 * n - 1);
  const ComplexMatrix b = commutator(a_n, h);

  const double k = 0.5 * tau;
  const ComplexMatrix inv_minus = propagator.spectral_function(
      [k](double lambda) { return 1.0 / (1.0 - kI * k * lambda); });
  const ComplexMatrix inv_plus = propagator.spectral_function(
      [k](double lambda) { return 1.0 / (1.0 + kI * k * lambda); });
  const ComplexMatrix inv_root = propagator.spectral_function(
      [k](double lambda) { return std::complex<double>(1.0 / std::sqrt(1.0 + k * k * lambda * lambda)); });
  const ComplexMatrix q = propagator.spectral_function(
      [k](double lambda) { return std::complex<double>(1.0 / (1.0 + k * k * lambda * lambda)); });
  const ComplexMatrix one_minus_k2 = propagator.spectral_function(
      [k](double lambda) { return std::complex<double>(1.0 - k * k * lambda * lambda); });

  std::vector<SchemeCheck> out;
  out.push_back(make_check("forward", lead * (a_next - a_n), inv_minus * b * inv_plus, tolerance, true));
  out.push_back(make_check("backward", lead * (a_n - a_prev), inv_plus * b * inv_minus, tolerance, true));
  out.push_back(make_check("symmetric_half_step", lead * (a_half_next - a_half_prev),
                           inv_root * b * inv_root, tolerance, true));
  const ComplexMatrix central = lead * (a_next - a_prev);
  out.push_back(make_check("central_derived", central, 2.0 * q * (b + (k * k) * h * b * h) * q,
                           tolerance, true));
  out.push_back(make_check("central_printed_scalar_factor", central,
                           2.0 * (1.0 - k * k) * q * b * q, tolerance, false));
  out.push_back(make_check("central_operator_factor", central, 2.0 * q * one_minus_k2 * b * q,
                           tolerance, false));
  return out;
}

std::vector<SchemeCheck> involution_identities(const HermitianOperator& hamiltonian,
                                               const ComplexMatrix& a0, double tau, long n,
                                               double tolerance, double involution_tolerance) {
  const ComplexMatrix& h = hamiltonian.matrix();
  const Eigen::Index d = hamiltonian.dimension();
  if (!(operator_norm(h * h - identity(d)) < involution_tolerance)) {
    throw DomainError("involution_identities: H^2 differs from the identity");
  }
  const CayleyPropagator propagator(hamiltonian, tau);
  require_square(a0, d, "involution_identities");

  const std::complex<double> lead = kI / tau;
  const ComplexMatrix a_prev = heisenberg_evolve(propagator, a0, n - 1);
  const ComplexMatrix a_n = heisenberg_evolve(propagator, a0, n);
  const ComplexMatrix a_next = heisenberg_evolve(propagator, a0, n + 1);
  const ComplexMatrix a_half_next = heisenberg_evolve_half(propagator, a0, 2 * n + 1);
  const ComplexMatrix a_half_prev = heisenberg_evolve_half(propagator, a0, 2 * n - 1);
  const ComplexMatrix b = commutator(a_n, h);

  const ComplexMatrix half_h = (0.5 * tau) * h;
  const ComplexMatrix plus = identity(d) + kI * half_h;
  const ComplexMatrix minus = identity(d) - kI * half_h;
  // (1 - i tau H/2)/(1 + i tau H/2) and its inverse; functions of H commute.
  const ComplexMatrix cayley = plus.partialPivLu().solve(minus);
  const ComplexMatrix cayley_inv = minus.partialPivLu().solve(plus);

  const ComplexMatrix forward = lead * (a_next - a_n);
  const ComplexMatrix backward = lead * (a_n - a_prev);
  const ComplexMatrix second = lead * lead * (a_next - 2.0 * a_n + a_prev);
  const ComplexMatrix symmetric = lead * (a_half_next - a_half_prev);
  const ComplexMatrix central = lead * (a_next - a_prev);

  // [A,H] anticommutes with H here, so the Cayley factor's placement
  // relative to the commutator matters. It holds to the right of [A,H].
  std::vector<SchemeCheck> out;
  out.push_back(make_scaled_check("forward", forward, b * cayley, tau, 1.0, tolerance, true));
  out.push_back(make_scaled_check("forward_factor_left", forward, cayley * b, tau, 1.0, tolerance, false));
  out.push_back(make_scaled_check("backward", backward, b * cayley_inv, tau, 1.0, tolerance, true));
  out.push_back(make_scaled_check("backward_factor_left", backward, cayley_inv * b, tau, 1.0, tolerance, false));
  out.push_back(make_scaled_check("second_difference", second, commutator(b, h), tau, 2.0, tolerance, true));
  out.push_back(make_scaled_check("symmetric", symmetric, b, tau, 1.0, tolerance, true));
  out.push_back(make_scaled_check("symmetric_printed_exponent", symmetric, b, tau, 2.0, tolerance, false));
  out.push_back(make_scaled_check("central", central, 2.0 * (1.0 - 0.25 * tau * tau) * b, tau, 2.0,
                                  tolerance, true));
  return out;
}

bool all_required_pass(const std::vector<SchemeCheck>& checks) {
  for (const auto& c : checks) {
    if (c.required && !c.passed()) return false;
  }
  return true;
}

}  // namespace dqm
