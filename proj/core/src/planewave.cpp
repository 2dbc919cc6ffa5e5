#include "dqm/planewave.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dqm/errors.hpp"

namespace dqm {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_size(const PlaneWaveBasis& basis, std::size_t n, const char* what) {
  if (basis.size() != n) {
    throw SizeMismatchError(std::string(what) + ": size does not match the basis");
  }
}

}  // namespace

PlaneWaveBasis::PlaneWaveBasis(std::size_t size, double epsilon)
    : size_(size), epsilon_(epsilon), momenta_(size), table_(size * size) {
  if (size_ == 0) throw DomainError("PlaneWaveBasis: N must be at least 1");
  if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_)) {
    throw DomainError("PlaneWaveBasis: epsilon must be positive and finite");
  }
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(size_));
  for (std::size_t m = 0; m < size_; ++m) {
    if (is_singular(m)) {
      momenta_[m] = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < size_; ++j) {
        table_[j * size_ + m] = (j % 2 == 0 ? 1.0 : -1.0) * inv_sqrt_n;
      }
      continue;
    }
    const double t = std::tan(std::numbers::pi * static_cast<double>(m) /
                              static_cast<double>(size_));
    momenta_[m] = 2.0 * t / epsilon_;
    const double half = 0.5 * epsilon_ * momenta_[m];
    const Complex ratio = (1.0 + kI * half) / (1.0 - kI * half);
    Complex power{1.0, 0.0};
    for (std::size_t j = 0; j < size_; ++j) {
      table_[j * size_ + m] = power * inv_sqrt_n;
      power *= ratio;
    }
  }
}

LatticeState PlaneWaveBasis::column(std::size_t m) const {
  if (m >= size_) throw DomainError("PlaneWaveBasis::column: index out of range");
  std::vector<Complex> amps(size_);
  for (std::size_t j = 0; j < size_; ++j) amps[j] = entry(j, m);
  return LatticeState(std::move(amps), epsilon_);
}

Complex PlaneWaveBasis::momentum_eigenvalue(std::size_t m) const {
  if (m >= size_) throw DomainError("momentum_eigenvalue: index out of range");
  if (is_singular(m)) return 2.0 * kI / epsilon_;
  const double k = momenta_[m];
  return k / (1.0 - 0.5 * kI * epsilon_ * k);
}

double PlaneWaveBasis::gram_defect() const {
  double worst = 0.0;
  for (std::size_t m = 0; m < size_; ++m) {
    for (std::size_t mp = 0; mp < size_; ++mp) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < size_; ++j) acc += std::conj(entry(j, m)) * entry(j, mp);
      const double target = m == mp ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(acc - target));
    }
  }
  return worst;
}

double PlaneWaveBasis::dft_defect() const {
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(size_));
  double worst = 0.0;
  for (std::size_t j = 0; j < size_; ++j) {
    for (std::size_t m = 0; m < size_; ++m) {
      // Reduce j*m mod N first so the phase argument stays small.
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * m) % size_) /
                           static_cast<double>(size_);
      worst = std::max(worst, std::abs(entry(j, m) - std::polar(inv_sqrt_n, phase)));
    }
  }
  return worst;
}

std::vector<Complex> forward_transform(const PlaneWaveBasis& basis, const LatticeState& state) {
  require_size(basis, state.size(), "forward_transform");
  const std::size_t n = basis.size();
  std::vector<Complex> coeffs(n, Complex{0.0, 0.0});
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) coeffs[m] += std::conj(basis.entry(j, m)) * state[j];
  }
  return coeffs;
}

LatticeState inverse_transform(const PlaneWaveBasis& basis, std::span<const Complex> coefficients) {
  require_size(basis, coefficients.size(), "inverse_transform");
  const std::size_t n = basis.size();
  std::vector<Complex> amps(n, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t m = 0; m < n; ++m) amps[j] += coefficients[m] * basis.entry(j, m);
  }
  return LatticeState(std::move(amps), basis.epsilon());
}

LatticeState momentum_apply(const PlaneWaveBasis& basis, const LatticeState& state) {
  require_size(basis, state.size(), "momentum_apply");
  if (basis.epsilon() != state.epsilon()) {
    throw SizeMismatchError("momentum_apply: lattice spacing does not match the basis");
  }
  const LatticeState diff = apply_difference(DifferenceKind::Forward, state, BoundaryRule::Periodic);
  const Complex scale = -kI / state.epsilon();
  std::vector<Complex> out(state.size());
  for (std::size_t j = 0; j < state.size(); ++j) out[j] = scale * diff[j];
  return LatticeState(std::move(out), state.epsilon());
}

LatticeState symmetric_momentum_apply(const LatticeState& state) {
  const LatticeState fwd = apply_difference(DifferenceKind::Forward, state, BoundaryRule::Periodic);
  const LatticeState bwd = apply_difference(DifferenceKind::Backward, state, BoundaryRule::Periodic);
  const Complex scale = -kI / (2.0 * state.epsilon());
  std::vector<Complex> out(state.size());
  for (std::size_t j = 0; j < state.size(); ++j) out[j] = scale * (fwd[j] + bwd[j]);
  return LatticeState(std::move(out), state.epsilon());
}

}  // namespace dqm
