#pragma once

// Vectors of the lattice Hilbert space: complex amplitudes on sites
// j = 0..N-1 with spacing epsilon, compared with a summation inner product.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dqm {

using Complex = std::complex<double>;

enum class DifferenceKind {
  Forward,    // f_{j+1} - f_j
  Backward,   // f_j - f_{j-1}
  Symmetric,  // f_{j+1/2} - f_{j-1/2}, needs half-step data
  Mean,       // (f_{j+1} + f_j) / 2
};

enum class BoundaryRule {
  Periodic,
  ZeroPadded,
};

class LatticeState {
 public:
  /// Throws DomainError for an empty amplitude list or non-positive spacing.
  LatticeState(std::vector<Complex> amplitudes, double epsilon);

  /// Kronecker state concentrated on `site`.
  static LatticeState kronecker(std::size_t size, std::size_t site, double epsilon);

  std::size_t size() const noexcept { return amplitudes_.size(); }
  double epsilon() const noexcept { return epsilon_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t j) const { return amplitudes_[j]; }

  double norm_squared() const noexcept;
  double norm() const noexcept;

 private:
  std::vector<Complex> amplitudes_;
  double epsilon_;
};

/// Sum over sites of conj(a_j) * b_j. Antilinear in the first argument.
Complex inner_product(const LatticeState& a, const LatticeState& b);

/// Applies a difference or mean operator. The symmetric difference is not
/// defined on integer sites alone and is rejected with DomainError.
LatticeState apply_difference(DifferenceKind kind, const LatticeState& f,
                              BoundaryRule boundary = BoundaryRule::Periodic);

/// (X f)_j = j * epsilon * f_j.
LatticeState position_apply(const LatticeState& f);

// Serialization. JSON layout: {"epsilon": e, "re": [...], "im": [...]}.
// CSV layout: header `j,re,im` followed by one row per site.
std::string to_json(const LatticeState& f);
LatticeState lattice_state_from_json(std::string_view text);
std::string to_csv(const LatticeState& f);

}  // namespace dqm
