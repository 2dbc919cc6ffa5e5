#include "dqm/oscillator.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include "dqm/errors.hpp"
#include "dqm/hermite.hpp"

namespace dqm {

namespace {

double alternating(int x) { return (x % 2 == 0) ? 1.0 : -1.0; }

void require_sizes(int level, std::span<const int> sizes) {
  if (level < 0) throw DomainError("oscillator: negative level");
  for (int n : sizes) {
    if (n < 1) throw DomainError("oscillator: sizes must be positive");
    if (level > n) throw DomainError("oscillator: level exceeds N");
  }
}

Eigen::VectorXd basis_vector(int dimension, int k) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dimension);
  if (k >= 0 && k < dimension) v[k] = 1.0;
  return v;
}

std::vector<double> psi_on_grid(int level, std::span<const double> grid, double scale = 1.0) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = scale * eval_psi(level, grid[i]);
  return out;
}

double max_difference(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

OscillatorModel::OscillatorModel(int size, double p, double energy_scale)
    : size_(size), p_(p), energy_scale_(energy_scale) {
  if (size < 1) throw DomainError("OscillatorModel: N must be at least 1");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("OscillatorModel: p must lie in (0, 1)");
  if (!(energy_scale > 0.0)) throw DomainError("OscillatorModel: energy scale must be positive");
}

double OscillatorModel::beta() const noexcept { return 2.0 * std::asin(std::sqrt(p_)); }

double OscillatorModel::lower(int n) const noexcept {
  if (n <= 0 || n > size_) return 0.0;
  return std::sqrt(static_cast<double>(n) * (size_ - n + 1) / size_);
}

double OscillatorModel::raise(int n) const noexcept {
  if (n < 0 || n >= size_) return 0.0;
  return std::sqrt(static_cast<double>(size_ - n) * (n + 1) / size_);
}

Eigen::VectorXd OscillatorModel::apply_annihilation(const Eigen::VectorXd& v) const {
  if (v.size() != levels()) throw SizeMismatchError("apply_annihilation: wrong level count");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(levels());
  for (int n = 1; n <= size_; ++n) out[n - 1] = lower(n) * v[n];
  return out;
}

Eigen::VectorXd OscillatorModel::apply_creation(const Eigen::VectorXd& v) const {
  if (v.size() != levels()) throw SizeMismatchError("apply_creation: wrong level count");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(levels());
  for (int n = 0; n < size_; ++n) out[n + 1] = raise(n) * v[n];
  return out;
}

Eigen::MatrixXd OscillatorModel::annihilation() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(levels(), levels());
  for (int n = 1; n <= size_; ++n) a(n - 1, n) = lower(n);
  return a;
}

Eigen::MatrixXd OscillatorModel::creation() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(levels(), levels());
  for (int n = 0; n < size_; ++n) a(n + 1, n) = raise(n);
  return a;
}

Eigen::MatrixXd OscillatorModel::hamiltonian() const {
  const Eigen::MatrixXd a = annihilation();
  const Eigen::MatrixXd ad = creation();
  return 0.5 * energy_scale_ * (a * ad + ad * a);
}

Eigen::MatrixXd OscillatorModel::position() const {
  return (annihilation() + creation()) / std::numbers::sqrt2;
}

double OscillatorModel::lattice_spacing() const noexcept {
  return 1.0 / std::sqrt(2.0 * size_ * p_ * q());
}

double OscillatorModel::grid_point(int x) const noexcept {
  return (x - size_ * p_) * lattice_spacing();
}

std::vector<double> commutator_spectrum(const OscillatorModel& model) {
  std::vector<double> out(static_cast<std::size_t>(model.levels()));
  for (int n = 0; n <= model.size(); ++n) out[static_cast<std::size_t>(n)] = 1.0 - n / model.j();
  return out;
}

double commutator_defect(const OscillatorModel& model) {
  const Eigen::MatrixXd a = model.annihilation();
  const Eigen::MatrixXd ad = model.creation();
  Eigen::MatrixXd c = a * ad - ad * a;
  const auto expected = commutator_spectrum(model);
  for (int n = 0; n <= model.size(); ++n) c(n, n) -= expected[static_cast<std::size_t>(n)];
  return c.cwiseAbs().maxCoeff();
}

long long commutator_trace_numerator(const OscillatorModel& model) {
  const long long big_n = model.size();
  long long total = 0;
  for (long long n = 0; n <= big_n; ++n) total += (big_n - n) * (n + 1) - n * (big_n - n + 1);
  return total;
}

double commutator_trace(const OscillatorModel& model) {
  const Eigen::MatrixXd a = model.annihilation();
  const Eigen::MatrixXd ad = model.creation();
  return (a * ad - ad * a).trace();
}

std::vector<double> energy_spectrum(const OscillatorModel& model) {
  std::vector<double> out(static_cast<std::size_t>(model.levels()));
  for (int n = 0; n <= model.size(); ++n) {
    out[static_cast<std::size_t>(n)] = (2.0 * n + 1.0) - static_cast<double>(n) * n / model.j();
  }
  return out;
}

double energy_defect(const OscillatorModel& model) {
  const Eigen::MatrixXd a = model.annihilation();
  const Eigen::MatrixXd ad = model.creation();
  const Eigen::MatrixXd anti = a * ad + ad * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(anti, Eigen::EigenvaluesOnly);
  auto expected = energy_spectrum(model);
  std::sort(expected.begin(), expected.end());
  double worst = 0.0;
  for (int k = 0; k <= model.size(); ++k) {
    worst = std::max(worst, std::abs(eig.eigenvalues()[k] - expected[static_cast<std::size_t>(k)]));
  }
  // The operator is diagonal on the levels, so compare level by level too.
  const auto by_level = energy_spectrum(model);
  for (int n = 0; n <= model.size(); ++n) {
    worst = std::max(worst, std::abs(anti(n, n) - by_level[static_cast<std::size_t>(n)]));
  }
  return worst;
}

PositionSpectrum position_spectrum(const OscillatorModel& model) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(model.position());
  PositionSpectrum out;
  out.eigenvalues = eig.eigenvalues();
  out.eigenvectors = eig.eigenvectors();
  const double root_j = std::sqrt(model.j());
  for (int tm = -model.size(); tm <= model.size(); tm += 2) {
    out.twice_m_prime.push_back(tm);
    out.expected.push_back(0.5 * tm / root_j);
  }
  return out;
}

double position_spectrum_defect(const PositionSpectrum& spectrum) {
  double worst = 0.0;
  for (std::size_t k = 0; k < spectrum.expected.size(); ++k) {
    worst = std::max(worst, std::abs(spectrum.eigenvalues[static_cast<Eigen::Index>(k)] - spectrum.expected[k]));
  }
  return worst;
}

double position_eigenvector_residual(const OscillatorModel& model) {
  const WignerDMatrix d(model.size(), 0.5 * std::numbers::pi);
  const Eigen::MatrixXd x_op = model.position();
  const double root_j = std::sqrt(model.j());
  double worst = 0.0;
  for (int x = 0; x <= model.size(); ++x) {
    const Eigen::VectorXd column = d.table().col(x);
    const double m_prime = model.j() - x;
    worst = std::max(worst, (x_op * column - (m_prime / root_j) * column).norm());
  }
  return worst;
}

std::vector<double> continuum_grid(int size, double p) {
  const double spacing = 1.0 / std::sqrt(2.0 * size * p * (1.0 - p));
  std::vector<double> grid(static_cast<std::size_t>(size) + 1);
  for (int x = 0; x <= size; ++x) grid[static_cast<std::size_t>(x)] = (x - size * p) * spacing;
  return grid;
}

std::vector<double> to_continuum(const WignerDMatrix& d, const Eigen::VectorXd& level_coefficients,
                                 double p) {
  const int big_n = d.twice_j();
  if (level_coefficients.size() != big_n + 1) {
    throw SizeMismatchError("to_continuum: coefficient count does not match the table");
  }
  const double scale = 1.0 / std::sqrt(1.0 / std::sqrt(2.0 * big_n * p * (1.0 - p)));
  const Eigen::VectorXd values = d.table().transpose() * level_coefficients;
  std::vector<double> out(static_cast<std::size_t>(big_n) + 1);
  for (int x = 0; x <= big_n; ++x) out[static_cast<std::size_t>(x)] = alternating(x) * values[x] * scale;
  return out;
}

void align_sign(std::vector<double>& f, std::span<const double> target) {
  if (target.empty() || f.size() != target.size()) return;
  std::size_t peak = 0;
  for (std::size_t i = 1; i < target.size(); ++i) {
    if (std::abs(target[i]) > std::abs(target[peak])) peak = i;
  }
  if (f[peak] * target[peak] < 0.0) {
    for (double& v : f) v = -v;
  }
}

bool ConvergenceTable::strictly_decreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].max_error < rows[i - 1].max_error)) return false;
  }
  return true;
}

double ConvergenceTable::fitted_order() const {
  if (rows.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& r : rows) {
    if (!(r.max_error > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    const double lx = std::log(static_cast<double>(r.size));
    const double ly = std::log(r.max_error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(rows.size());
  return -(k * sxy - sx * sy) / (k * sxx - sx * sx);
}

ConvergenceTable continuum_convergence(int level, std::span<const int> sizes, double p) {
  require_sizes(level, sizes);
  ConvergenceTable table;
  table.level = level;
  for (int big_n : sizes) {
    const WignerDMatrix d = WignerDMatrix::from_kravchuk(KravchukFamily(big_n, p));
    const auto grid = continuum_grid(big_n, p);
    const auto target = psi_on_grid(level, grid);
    auto discrete = to_continuum(d, basis_vector(big_n + 1, level), p);
    align_sign(discrete, target);
    table.rows.push_back({big_n, max_difference(discrete, target)});
  }
  return table;
}

std::vector<LadderLimitRow> ladder_limit_check(int level, std::span<const int> sizes, double p) {
  require_sizes(level, sizes);
  std::vector<LadderLimitRow> rows;
  for (int big_n : sizes) {
    const OscillatorModel model(big_n, p);
    const WignerDMatrix d = WignerDMatrix::from_kravchuk(KravchukFamily(big_n, p));
    const auto grid = continuum_grid(big_n, p);
    const Eigen::VectorXd v = basis_vector(model.levels(), level);

    auto lowered = to_continuum(d, model.apply_annihilation(v), p);
    const auto lower_target = psi_on_grid(level - 1, grid, std::sqrt(static_cast<double>(level)));
    align_sign(lowered, lower_target);

    auto raised = to_continuum(d, model.apply_creation(v), p);
    const auto raise_target = psi_on_grid(level + 1, grid, std::sqrt(level + 1.0));
    align_sign(raised, raise_target);

    rows.push_back({big_n, max_difference(lowered, lower_target), max_difference(raised, raise_target)});
  }
  return rows;
}

LimitRecurrenceResiduals limit_recurrence_check(const OscillatorModel& model, int level) {
  const int big_n = model.size();
  if (level < 0 || level + 1 > big_n) {
    throw DomainError("limit_recurrence_check: need 0 <= n and n + 1 <= N");
  }
  const KravchukFamily family(big_n, model.p());
  auto v = [&](int n, int x) {
    if (n < 0 || n > big_n || x < 0 || x > big_n) return 0.0;
    return family.orthonormal_function(n, x);
  };
  const double n = level;
  const double width = std::sqrt(2.0 * big_n * model.p() * model.q());
  const double up = std::sqrt(2.0 * (n + 1.0)) * std::sqrt(1.0 - n / big_n);
  const double down = std::sqrt(2.0 * n) * std::sqrt(1.0 - (n - 1.0) / big_n);
  LimitRecurrenceResiduals out;
  for (int x = 0; x <= big_n; ++x) {
    const double s = model.grid_point(x);
    const double lhs = 2.0 * (s + (2.0 * model.p() - 1.0) * n / width) * v(level, x);
    const double rhs = up * v(level + 1, x) + down * v(level - 1, x);
    out.three_term = std::max(out.three_term, std::abs(lhs - rhs));

    const double diff_lhs = std::numbers::sqrt2 *
        (std::sqrt(static_cast<double>(big_n - x) * (x + 1) / big_n) * v(level, x + 1) -
         std::sqrt(static_cast<double>(x) * (big_n - x + 1) / big_n) * v(level, x - 1));
    const double diff_rhs = down * v(level - 1, x) - up * v(level + 1, x);
    out.difference = std::max(out.difference, std::abs(diff_lhs - diff_rhs));
  }
  return out;
}

double difference_continuum_error(const OscillatorModel& model, int level, double window) {
  const int big_n = model.size();
  if (level < 0 || level > big_n) throw DomainError("difference_continuum_error: level out of range");
  const KravchukFamily family(big_n, model.p());
  const auto grid = continuum_grid(big_n, model.p());
  const double scale = 1.0 / std::sqrt(model.lattice_spacing());

  std::vector<double> column(grid.size());
  for (int x = 0; x <= big_n; ++x) column[static_cast<std::size_t>(x)] = family.orthonormal_function(level, x);
  std::vector<double> rescaled(column);
  for (double& c : rescaled) c *= scale;
  const auto target = psi_on_grid(level, grid);
  const double orientation = [&] {
    auto probe = rescaled;
    align_sign(probe, target);
    return probe == rescaled ? 1.0 : -1.0;
  }();

  auto u = [&](int x) { return (x < 0 || x > big_n) ? 0.0 : column[static_cast<std::size_t>(x)]; };
  double worst = 0.0;
  for (int x = 0; x <= big_n; ++x) {
    const double s = grid[static_cast<std::size_t>(x)];
    if (std::abs(s) > window) continue;
    const double lhs = std::numbers::sqrt2 *
        (std::sqrt(static_cast<double>(big_n - x) * (x + 1) / big_n) * u(x + 1) -
         std::sqrt(static_cast<double>(x) * (big_n - x + 1) / big_n) * u(x - 1));
    worst = std::max(worst, std::abs(orientation * scale * lhs - 2.0 * eval_psi_derivative(level, s)));
  }
  return worst;
}

}  // namespace dqm
