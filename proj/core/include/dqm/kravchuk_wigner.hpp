#pragma once

// Kravchuk polynomials on x = 0..N with binomial weight
// rho(x) = C(N,x) p^x q^(N-x), and the Wigner functions they assemble into:
//
//   d^j_{m m'}(beta) = (-1)^{m-m'} sqrt(rho(x)) k_n(x) / d_n,
//   N = 2j,  n = j - m,  x = j - m',  p = sin^2(beta/2).
//
// The polynomial convention is fixed by k_0 = 1 and by requiring the
// assembled table to be the standard rotation matrix (d^j_{jj} = cos^{2j}(beta/2)),
// which gives k_n = (-1)^n K_n(x; p, N) in terms of the hypergeometric
// Kravchuk polynomials. Tables are indexed by (n, x) throughout.

#include <Eigen/Dense>
#include <vector>

namespace dqm {

class KravchukFamily {
 public:
  /// Throws DomainError unless N >= 1 and 0 < p < 1, and if the polynomial
  /// values leave the double range.
  KravchukFamily(int degree, double p);

  int degree() const noexcept { return degree_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return 1.0 - p_; }

  /// k_n(x).
  double value(int n, int x) const { return values_(n, x); }
  /// rho(x).
  double weight(int x) const { return weights_[static_cast<std::size_t>(x)]; }
  /// d_n = sqrt(sum_x rho(x) k_n(x)^2).
  double norm(int n) const { return norms_[static_cast<std::size_t>(n)]; }

  /// sqrt(rho(x)) k_n(x) / d_n, orthonormal in n for the counting measure.
  double orthonormal_function(int n, int x) const;

  /// max_{n != n'} |sum_x rho k_n k_n'| / (d_n d_n').
  double orthogonality_defect() const;

  const Eigen::MatrixXd& values() const noexcept { return values_; }

 private:
  int degree_;
  double p_;
  Eigen::MatrixXd values_;  // (n, x)
  std::vector<double> weights_;
  std::vector<double> norms_;
};

class WignerDMatrix {
 public:
  /// Table for spin j = twice_j / 2 at angle beta, assembled from the
  /// Kravchuk family with p = sin^2(beta/2). Throws DomainError unless
  /// twice_j >= 1 and 0 < beta < pi.
  WignerDMatrix(int twice_j, double beta);

  static WignerDMatrix from_kravchuk(const KravchukFamily& family);

  int twice_j() const noexcept { return twice_j_; }
  double j() const noexcept { return 0.5 * twice_j_; }
  double beta() const noexcept { return beta_; }
  int dimension() const noexcept { return twice_j_ + 1; }

  /// d^j_{j-n, j-x}(beta); zero outside 0..N so ladder shifts close.
  double operator()(int n, int x) const;

  /// d^j_{m m'} addressed by doubled magnetic numbers 2m, 2m'.
  double element(int twice_m, int twice_m_prime) const;

  const Eigen::MatrixXd& table() const noexcept { return table_; }

 private:
  WignerDMatrix(int twice_j, double beta, Eigen::MatrixXd table);

  int twice_j_;
  double beta_;
  Eigen::MatrixXd table_;  // (n, x)
};

/// Independent evaluation of d^j_{m m'}(beta) from the finite binomial sum,
/// accumulated in long double. Arguments are doubled magnetic numbers.
double wigner_d_direct(int twice_j, int twice_m, int twice_m_prime, double beta);

/// max |d_{mm'} - (-1)^{m-m'} d_{m'm}|.
double symmetry_defect(const WignerDMatrix& d);

/// max |D D^T - 1|.
double orthogonality_defect(const WignerDMatrix& d);

/// max entrywise |table - wigner_d_direct|.
double direct_sum_defect(const WignerDMatrix& d);

enum class LadderSign { Raise, Lower };

/// Largest entrywise residual of
///   +-(d/dbeta) d_{mm'} + ((m' - m cos beta)/sin beta) d_{mm'}
///       = sqrt((j -+ m)(j +- m + 1)) d_{m+-1, m'}
/// with the derivative taken by central differences of step `step`.
double differential_relation_residual(const WignerDMatrix& d, LadderSign sign, double step = 1e-5);

struct RecurrenceResiduals {
  double three_term = 0.0;      // relation in m at fixed m'
  double column_shift = 0.0;    // relation mixing m' +- 1 with m +- 1
};

/// Both recurrences hold exactly, so the residuals are pure roundoff.
RecurrenceResiduals recurrence_residuals(const WignerDMatrix& d);

}  // namespace dqm
