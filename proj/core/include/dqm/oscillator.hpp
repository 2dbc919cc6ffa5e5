#pragma once

// Finite oscillator on N + 1 levels (N = 2j). The ladder operators act on
// the level index n = j - m of the Wigner functions,
//
//   A  v_n = sqrt(n (N - n + 1) / N) v_{n-1},
//   A+ v_n = sqrt((N - n)(n + 1) / N) v_{n+1},
//
// so [A, A+] = 1 - n/j and A A+ + A+ A = (2n + 1) - n^2/j on level n. The
// position operator (A + A+)/sqrt(2) has spectrum m'/sqrt(j), m' = -j..j,
// diagonalized by the Wigner columns at beta = pi/2.
//
// Continuum comparisons map grid point x to s = (x - Np)/sqrt(2Npq) and scale
// amplitudes by 1/sqrt(ds), ds = 1/sqrt(2Npq), to pass from unit l2 norm to
// unit L2 norm. The alternating factor (-1)^x of the Wigner rows is removed
// first, leaving sqrt(rho) k_n / d_n, and one global sign per function is
// matched to the target at its largest sample.

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "dqm/kravchuk_wigner.hpp"

namespace dqm {

class OscillatorModel {
 public:
  /// Throws DomainError unless N >= 1, 0 < p < 1 and energy_scale > 0.
  explicit OscillatorModel(int size, double p = 0.5, double energy_scale = 1.0);

  int size() const noexcept { return size_; }
  int levels() const noexcept { return size_ + 1; }
  double j() const noexcept { return 0.5 * size_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return 1.0 - p_; }
  double beta() const noexcept;
  double energy_scale() const noexcept { return energy_scale_; }

  /// Coefficient of A on level n; zero at n = 0 and outside the ladder.
  double lower(int n) const noexcept;
  /// Coefficient of A+ on level n; zero at n = N and outside the ladder.
  double raise(int n) const noexcept;

  Eigen::VectorXd apply_annihilation(const Eigen::VectorXd& v) const;
  Eigen::VectorXd apply_creation(const Eigen::VectorXd& v) const;

  // Dense forms, materialized for eigen-solves and explicit commutators.
  Eigen::MatrixXd annihilation() const;
  Eigen::MatrixXd creation() const;
  /// (energy_scale / 2)(A A+ + A+ A).
  Eigen::MatrixXd hamiltonian() const;
  /// (A + A+)/sqrt(2).
  Eigen::MatrixXd position() const;

  /// Spacing of the s-grid, 1/sqrt(2Npq).
  double lattice_spacing() const noexcept;
  /// s_x = (x - Np)/sqrt(2Npq).
  double grid_point(int x) const noexcept;

 private:
  int size_;
  double p_;
  double energy_scale_;
};

/// 1 - n/j for n = 0..N.
std::vector<double> commutator_spectrum(const OscillatorModel& model);
/// Largest deviation of the explicit AA+ - A+A from diag(1 - n/j).
double commutator_defect(const OscillatorModel& model);
/// N * trace[A, A+] summed in integers, (N-n)(n+1) - n(N-n+1) per level.
long long commutator_trace_numerator(const OscillatorModel& model);
/// trace of the explicit commutator in floating point.
double commutator_trace(const OscillatorModel& model);

/// (2n + 1) - n^2/j for n = 0..N, in units of energy_scale / 2.
std::vector<double> energy_spectrum(const OscillatorModel& model);
/// Largest deviation of the sorted eigenvalues of AA+ + A+A from the formula.
double energy_defect(const OscillatorModel& model);

struct PositionSpectrum {
  std::vector<int> twice_m_prime;    // 2m' ascending, -N..N step 2
  std::vector<double> expected;      // m'/sqrt(j)
  Eigen::VectorXd eigenvalues;       // ascending, from the eigen-solve
  Eigen::MatrixXd eigenvectors;      // columns match eigenvalues
};

PositionSpectrum position_spectrum(const OscillatorModel& model);
/// max |eigenvalue - m'/sqrt(j)|.
double position_spectrum_defect(const PositionSpectrum& spectrum);
/// max over x of ||X d_x - (m'/sqrt(j)) d_x|| with d_x the Wigner column
/// (d^j_{j-n, j-x}(pi/2))_n.
double position_eigenvector_residual(const OscillatorModel& model);

/// s-grid for x = 0..N.
std::vector<double> continuum_grid(int size, double p);

/// Maps level-space coefficients to the s-grid: (-1)^x sum_k c_k d(k, x) / sqrt(ds).
std::vector<double> to_continuum(const WignerDMatrix& d, const Eigen::VectorXd& level_coefficients,
                                 double p);

/// Flips `f` if it disagrees in sign with `target` at target's largest sample.
void align_sign(std::vector<double>& f, std::span<const double> target);

struct ConvergenceRow {
  int size = 0;
  double max_error = 0.0;
};

struct ConvergenceTable {
  int level = 0;
  std::vector<ConvergenceRow> rows;

  bool strictly_decreasing() const;
  /// -slope of the least-squares line of log(error) against log(N).
  double fitted_order() const;
};

/// Wigner row n mapped onto the s-grid against psi_n, one row per N.
ConvergenceTable continuum_convergence(int level, std::span<const int> sizes, double p = 0.5);

struct LadderLimitRow {
  int size = 0;
  double lowering_error = 0.0;  // A v_n against sqrt(n) psi_{n-1}
  double raising_error = 0.0;   // A+ v_n against sqrt(n+1) psi_{n+1}
};

std::vector<LadderLimitRow> ladder_limit_check(int level, std::span<const int> sizes, double p = 0.5);

struct LimitRecurrenceResiduals {
  /// 2(s + (2p-1)n/sqrt(2Npq)) v_n = sqrt(2(n+1)) sqrt(1 - n/N) v_{n+1}
  ///                                + sqrt(2n) sqrt(1 - (n-1)/N) v_{n-1}
  double three_term = 0.0;
  /// sqrt(2)[sqrt((N-x)(x+1)/N) v_n(x+1) - sqrt(x(N-x+1)/N) v_n(x-1)]
  ///   = sqrt(2n(1 - (n-1)/N)) v_{n-1} - sqrt(2(n+1)(1 - n/N)) v_{n+1}
  double difference = 0.0;
};

/// Evaluates the two pre-limit recurrences on v_n(x) = sqrt(rho) k_n / d_n.
LimitRecurrenceResiduals limit_recurrence_check(const OscillatorModel& model, int level);

/// Distance between the difference relation's left side (rescaled) and its
/// continuum counterpart 2 psi_n' over grid points with |s| <= window.
double difference_continuum_error(const OscillatorModel& model, int level, double window = 2.0);

}  // namespace dqm
