#include "dqm/kravchuk_wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dqm/errors.hpp"

namespace dqm {

namespace {

double sign_power(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

std::vector<double> binomial_weights(int n_max, double p) {
  const double q = 1.0 - p;
  std::vector<double> rho(static_cast<std::size_t>(n_max) + 1);
  const double log_p = std::log(p);
  const double log_q = std::log(q);
  for (int x = 0; x <= n_max; ++x) {
    const double log_choose = std::lgamma(n_max + 1.0) - std::lgamma(x + 1.0) -
                              std::lgamma(n_max - x + 1.0);
    rho[static_cast<std::size_t>(x)] = std::exp(log_choose + x * log_p + (n_max - x) * log_q);
  }
  // Refine with the exact ratio rho(x+1)/rho(x) outward from the mode, which
  // keeps relative accuracy near ulp level where it matters.
  const int mode = std::clamp(static_cast<int>(std::floor((n_max + 1) * p)), 0, n_max);
  for (int x = mode; x < n_max; ++x) {
    rho[static_cast<std::size_t>(x) + 1] =
        rho[static_cast<std::size_t>(x)] * (n_max - x) / (x + 1.0) * (p / q);
  }
  for (int x = mode; x > 0; --x) {
    rho[static_cast<std::size_t>(x) - 1] =
        rho[static_cast<std::size_t>(x)] * x / (n_max - x + 1.0) * (q / p);
  }
  double total = 0.0;
  for (double r : rho) total += r;
  for (double& r : rho) r /= total;
  return rho;
}

}  // namespace

KravchukFamily::KravchukFamily(int degree, double p)
    : degree_(degree), p_(p), values_(degree + 1, degree + 1) {
  if (degree < 1) throw DomainError("KravchukFamily: N must be at least 1");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("KravchukFamily: p must lie in (0, 1)");

  const int big_n = degree_;
  const double q = 1.0 - p_;
  const double half = 0.5 * big_n;

  // Three-term recurrence in n at fixed x,
  //   -x k_n = -p(N-n) k_{n+1} - (p(N-n) + n q) k_n - n q k_{n-1},
  // run upward from k_0 = 1 and downward from k_N = (-1)^N (-q/p)^x. Each
  // direction is stable until it crosses the oscillatory band of column x,
  // so the two are joined at the band centre n* = j - (j - x)(q - p).
  for (int x = 0; x <= big_n; ++x) {
    Eigen::VectorXd up(big_n + 1);
    up[0] = 1.0;
    double prev = 0.0;
    for (int n = 0; n < big_n; ++n) {
      const double next = ((x - p_ * (big_n - n) - n * q) * up[n] - n * q * prev) / (p_ * (big_n - n));
      prev = up[n];
      up[n + 1] = next;
    }

    Eigen::VectorXd down(big_n + 2);
    down[big_n + 1] = 0.0;
    down[big_n] = sign_power(big_n + x) * std::pow(q / p_, x);
    for (int n = big_n; n >= 1; --n) {
      down[n - 1] = ((x - p_ * (big_n - n) - n * q) * down[n] - p_ * (big_n - n) * down[n + 1]) / (n * q);
    }

    const int join = std::clamp(static_cast<int>(std::floor(half - (half - x) * (q - p_))), 0, big_n);
    for (int n = 0; n <= big_n; ++n) values_(n, x) = n <= join ? up[n] : down[n];
  }
  if (!values_.allFinite()) {
    throw DomainError("KravchukFamily: polynomial values overflow for this (N, p)");
  }

  weights_ = binomial_weights(big_n, p_);
  norms_.resize(static_cast<std::size_t>(big_n) + 1);
  for (int n = 0; n <= big_n; ++n) {
    double acc = 0.0;
    for (int x = 0; x <= big_n; ++x) acc += weight(x) * values_(n, x) * values_(n, x);
    norms_[static_cast<std::size_t>(n)] = std::sqrt(acc);
  }
}

double KravchukFamily::orthonormal_function(int n, int x) const {
  return std::sqrt(weight(x)) * value(n, x) / norm(n);
}

double KravchukFamily::orthogonality_defect() const {
  double worst = 0.0;
  for (int n = 0; n <= degree_; ++n) {
    for (int m = n + 1; m <= degree_; ++m) {
      double acc = 0.0;
      for (int x = 0; x <= degree_; ++x) acc += weight(x) * value(n, x) * value(m, x);
      worst = std::max(worst, std::abs(acc) / (norm(n) * norm(m)));
    }
  }
  return worst;
}

WignerDMatrix::WignerDMatrix(int twice_j, double beta, Eigen::MatrixXd table)
    : twice_j_(twice_j), beta_(beta), table_(std::move(table)) {}

WignerDMatrix::WignerDMatrix(int twice_j, double beta)
    : twice_j_(twice_j), beta_(beta) {
  if (twice_j < 1) throw DomainError("WignerDMatrix: 2j must be at least 1");
  if (!(beta > 0.0 && beta < std::numbers::pi)) {
    throw DomainError("WignerDMatrix: beta must lie strictly between 0 and pi");
  }
  const double s = std::sin(0.5 * beta);
  *this = from_kravchuk(KravchukFamily(twice_j, s * s));
  beta_ = beta;
}

WignerDMatrix WignerDMatrix::from_kravchuk(const KravchukFamily& family) {
  const int big_n = family.degree();
  Eigen::MatrixXd table(big_n + 1, big_n + 1);
  for (int n = 0; n <= big_n; ++n) {
    for (int x = 0; x <= big_n; ++x) {
      table(n, x) = sign_power(x - n) * family.orthonormal_function(n, x);
    }
  }
  const double beta = 2.0 * std::asin(std::sqrt(family.p()));
  return WignerDMatrix(big_n, beta, std::move(table));
}

double WignerDMatrix::operator()(int n, int x) const {
  if (n < 0 || x < 0 || n > twice_j_ || x > twice_j_) return 0.0;
  return table_(n, x);
}

double WignerDMatrix::element(int twice_m, int twice_m_prime) const {
  if (std::abs(twice_m) > twice_j_ || std::abs(twice_m_prime) > twice_j_ ||
      (twice_j_ - twice_m) % 2 != 0 || (twice_j_ - twice_m_prime) % 2 != 0) {
    throw DomainError("WignerDMatrix::element: magnetic numbers do not belong to this j");
  }
  return table_((twice_j_ - twice_m) / 2, (twice_j_ - twice_m_prime) / 2);
}

double wigner_d_direct(int twice_j, int twice_m, int twice_m_prime, double beta) {
  const int jpm = (twice_j + twice_m) / 2;
  const int jmm = (twice_j - twice_m) / 2;
  const int jpmp = (twice_j + twice_m_prime) / 2;
  const int jmmp = (twice_j - twice_m_prime) / 2;
  const int shift = (twice_m - twice_m_prime) / 2;
  const long double c = cosl(0.5L * beta);
  const long double s = sinl(0.5L * beta);
  const long double log_prefactor =
      0.5L * (lgammal(jpm + 1.0L) + lgammal(jmm + 1.0L) + lgammal(jpmp + 1.0L) + lgammal(jmmp + 1.0L));
  long double total = 0.0L;
  for (int k = 0; k <= twice_j; ++k) {
    const int a = jpmp - k;
    const int b = shift + k;
    const int d = jmm - k;
    if (a < 0 || b < 0 || d < 0) continue;
    const int cos_power = twice_j - shift - 2 * k;
    const int sin_power = shift + 2 * k;
    const long double log_den = lgammal(a + 1.0L) + lgammal(k + 1.0L) + lgammal(b + 1.0L) + lgammal(d + 1.0L);
    const long double magnitude = expl(log_prefactor - log_den) * powl(c, cos_power) * powl(s, sin_power);
    total += ((b % 2 == 0) ? magnitude : -magnitude);
  }
  return static_cast<double>(total);
}

double symmetry_defect(const WignerDMatrix& d) {
  double worst = 0.0;
  for (int n = 0; n < d.dimension(); ++n) {
    for (int x = 0; x < d.dimension(); ++x) {
      worst = std::max(worst, std::abs(d(n, x) - sign_power(x - n) * d(x, n)));
    }
  }
  return worst;
}

double orthogonality_defect(const WignerDMatrix& d) {
  const Eigen::MatrixXd gram = d.table() * d.table().transpose();
  return (gram - Eigen::MatrixXd::Identity(d.dimension(), d.dimension())).cwiseAbs().maxCoeff();
}

double direct_sum_defect(const WignerDMatrix& d) {
  double worst = 0.0;
  const int tj = d.twice_j();
  for (int n = 0; n < d.dimension(); ++n) {
    for (int x = 0; x < d.dimension(); ++x) {
      const double oracle = wigner_d_direct(tj, tj - 2 * n, tj - 2 * x, d.beta());
      worst = std::max(worst, std::abs(d(n, x) - oracle));
    }
  }
  return worst;
}

double differential_relation_residual(const WignerDMatrix& d, LadderSign sign, double step) {
  const double beta = d.beta();
  if (!(step > 0.0) || beta - step <= 0.0 || beta + step >= std::numbers::pi) {
    throw DomainError("differential_relation_residual: step leaves (0, pi)");
  }
  const WignerDMatrix ahead(d.twice_j(), beta + step);
  const WignerDMatrix behind(d.twice_j(), beta - step);
  const double j = d.j();
  const double cos_b = std::cos(beta);
  const double sin_b = std::sin(beta);
  const double orientation = sign == LadderSign::Raise ? 1.0 : -1.0;
  double worst = 0.0;
  for (int n = 0; n < d.dimension(); ++n) {
    const double m = j - n;
    for (int x = 0; x < d.dimension(); ++x) {
      const double mp = j - x;
      const double derivative = (ahead(n, x) - behind(n, x)) / (2.0 * step);
      const double lhs = orientation * derivative + (mp - m * cos_b) / sin_b * d(n, x);
      // m + 1 is level n - 1, m - 1 is level n + 1.
      const double rhs = sign == LadderSign::Raise
                             ? std::sqrt((j - m) * (j + m + 1.0)) * d(n - 1, x)
                             : std::sqrt((j + m) * (j - m + 1.0)) * d(n + 1, x);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

RecurrenceResiduals recurrence_residuals(const WignerDMatrix& d) {
  const int big_n = d.twice_j();
  const double j = d.j();
  const double cos_b = std::cos(d.beta());
  const double sin_b = std::sin(d.beta());
  RecurrenceResiduals out;
  for (int n = 0; n <= big_n; ++n) {
    const double m = j - n;
    const double up = std::sqrt(static_cast<double>(n) * (big_n - n + 1));    // sqrt((j-m)(j+m+1))
    const double down = std::sqrt(static_cast<double>(big_n - n) * (n + 1));  // sqrt((j+m)(j-m+1))
    for (int x = 0; x <= big_n; ++x) {
      const double mp = j - x;
      const double three_term = 2.0 * (mp - m * cos_b) / sin_b * d(n, x) -
                                (up * d(n - 1, x) + down * d(n + 1, x));
      // m' - 1 is grid point x + 1, m' + 1 is x - 1.
      const double lhs = std::sqrt(static_cast<double>(big_n - x) * (x + 1)) * d(n, x + 1) -
                         std::sqrt(static_cast<double>(x) * (big_n - x + 1)) * d(n, x - 1);
      const double rhs = up * d(n - 1, x) - down * d(n + 1, x);
      out.three_term = std::max(out.three_term, std::abs(three_term));
      out.column_shift = std::max(out.column_shift, std::abs(lhs - rhs));
    }
  }
  return out;
}

}  // namespace dqm
