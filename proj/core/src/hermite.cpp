#include "dqm/hermite.hpp"

#include <cmath>
#include <numbers>

#include "dqm/errors.hpp"

namespace dqm {

double hermite_polynomial(int n, double s) {
  if (n < 0) throw DomainError("hermite_polynomial: negative degree");
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = 2.0 * s * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> eval_psi_all(int n_max, double s) {
  if (n_max < 0) throw DomainError("eval_psi: negative level");
  // Normalized recurrence psi_{k+1} = sqrt(2/(k+1)) s psi_k - sqrt(k/(k+1)) psi_{k-1},
  // run on scaled values with the scale kept as a logarithm.
  std::vector<double> scaled(static_cast<std::size_t>(n_max) + 1);
  std::vector<double> log_scale(scaled.size());
  double log_factor = -0.5 * s * s - 0.25 * std::log(std::numbers::pi);
  double prev = 0.0;
  double cur = 1.0;
  scaled[0] = cur;
  log_scale[0] = log_factor;
  for (int k = 0; k < n_max; ++k) {
    double next = std::sqrt(2.0 / (k + 1.0)) * s * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e150) {
      prev *= 1e-150;
      cur *= 1e-150;
      log_factor += 150.0 * std::log(10.0);
    }
    scaled[static_cast<std::size_t>(k) + 1] = cur;
    log_scale[static_cast<std::size_t>(k) + 1] = log_factor;
  }
  std::vector<double> out(scaled.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = scaled[k] == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(scaled[k])) + log_scale[k]), scaled[k]);
  }
  return out;
}

double eval_psi(int n, double s) {
  if (n < 0) return 0.0;
  return eval_psi_all(n, s).back();
}

double eval_psi_derivative(int n, double s) {
  if (n < 0) throw DomainError("eval_psi_derivative: negative level");
  // psi_n' = sqrt(2n) psi_{n-1} - s psi_n, from H_n' = 2n H_{n-1}.
  const auto psi = eval_psi_all(n, s);
  const double lower = n > 0 ? psi[static_cast<std::size_t>(n) - 1] : 0.0;
  return std::sqrt(2.0 * n) * lower - s * psi.back();
}

double eval_psi_second_derivative(int n, double s) {
  if (n < 0) throw DomainError("eval_psi_second_derivative: negative level");
  // Differentiate psi_n' = sqrt(2n) psi_{n-1} - s psi_n once more.
  const double lower_prime = n > 0 ? eval_psi_derivative(n - 1, s) : 0.0;
  return std::sqrt(2.0 * n) * lower_prime - eval_psi(n, s) - s * eval_psi_derivative(n, s);
}

double ladder_apply(Ladder which, int n, double s) {
  const double psi = eval_psi(n, s);
  const double psi_prime = eval_psi_derivative(n, s);
  const double sign = which == Ladder::Raise ? -1.0 : 1.0;
  return (s * psi + sign * psi_prime) / std::numbers::sqrt2;
}

HermiteRecurrenceResiduals recurrence_residual(int n, std::span<const double> grid, double step) {
  if (n < 0) throw DomainError("recurrence_residual: negative level");
  HermiteRecurrenceResiduals out;
  const double up = std::sqrt(2.0 * (n + 1));
  const double down = std::sqrt(2.0 * n);
  for (double s : grid) {
    const auto psi = eval_psi_all(n + 1, s);
    const double psi_n = psi[static_cast<std::size_t>(n)];
    const double psi_up = psi[static_cast<std::size_t>(n) + 1];
    const double psi_down = n > 0 ? psi[static_cast<std::size_t>(n) - 1] : 0.0;
    out.multiplication = std::max(out.multiplication, std::abs(2.0 * s * psi_n - (up * psi_up + down * psi_down)));
    const double derivative = (eval_psi(n, s + step) - eval_psi(n, s - step)) / (2.0 * step);
    out.derivative = std::max(out.derivative, std::abs(2.0 * derivative - (-up * psi_up + down * psi_down)));
  }
  return out;
}

double schrodinger_residual(int n, std::span<const double> grid) {
  double worst = 0.0;
  for (double s : grid) {
    const double psi = eval_psi(n, s);
    const double r = -eval_psi_second_derivative(n, s) + s * s * psi - (2.0 * n + 1.0) * psi;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double quadrature_overlap(int n, int m, double step) {
  const double half_width = std::sqrt(2.0 * std::max(n, m) + 1.0) + 10.0;
  int intervals = static_cast<int>(std::ceil(2.0 * half_width / step));
  if (intervals % 2 != 0) ++intervals;
  const double h = 2.0 * half_width / intervals;
  const int top = std::max(n, m);
  double acc = 0.0;
  for (int i = 0; i <= intervals; ++i) {
    const double s = -half_width + i * h;
    const auto psi = eval_psi_all(top, s);
    const double f = psi[static_cast<std::size_t>(n)] * psi[static_cast<std::size_t>(m)];
    const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += w * f;
  }
  return acc * h / 3.0;
}

Eigen::MatrixXd gram_matrix(int n_max, double step) {
  Eigen::MatrixXd gram(n_max + 1, n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    for (int m = n; m <= n_max; ++m) {
      gram(n, m) = gram(m, n) = quadrature_overlap(n, m, step);
    }
  }
  return gram;
}

int count_sign_changes(int n, int samples) {
  const double half_width = std::sqrt(2.0 * n + 1.0) + 2.0;
  const auto grid = uniform_grid(-half_width, half_width, samples);
  int changes = 0;
  double last = eval_psi(n, grid.front());
  for (double s : grid) {
    const double v = eval_psi(n, s);
    if (v == 0.0) continue;
    if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++changes;
    last = v;
  }
  return changes;
}

std::vector<double> uniform_grid(double lo, double hi, int samples) {
  if (samples < 1) throw DomainError("uniform_grid: need at least one sample");
  std::vector<double> grid(static_cast<std::size_t>(samples));
  if (samples == 1) {
    grid[0] = lo;
    return grid;
  }
  const double h = (hi - lo) / (samples - 1);
  for (int i = 0; i < samples; ++i) grid[static_cast<std::size_t>(i)] = lo + i * h;
  return grid;
}

}  // namespace dqm
