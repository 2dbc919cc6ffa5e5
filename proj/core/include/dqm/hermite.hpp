#pragma once

// Continuum reference: normalized oscillator eigenfunctions
//
//   psi_n(s) = (sqrt(pi) 2^n n!)^{-1/2} exp(-s^2/2) H_n(s),
//
// their recurrences, and the ladder operators (s -+ d/ds)/sqrt(2).
// Derivatives are analytic (H_n' = 2n H_{n-1}); finite differences appear
// only where a residual check asks for them.

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace dqm {

/// Physicists' Hermite polynomial from H_{n+1} = 2s H_n - 2n H_{n-1}.
double hermite_polynomial(int n, double s);

/// psi_0(s), ..., psi_{n_max}(s), evaluated with a running log scale so
/// large |s| neither overflows H_n nor underflows the Gaussian early.
std::vector<double> eval_psi_all(int n_max, double s);

double eval_psi(int n, double s);
double eval_psi_derivative(int n, double s);
double eval_psi_second_derivative(int n, double s);

enum class Ladder { Raise, Lower };

/// (s -+ d/ds) psi_n(s) / sqrt(2) with the analytic derivative.
double ladder_apply(Ladder which, int n, double s);

struct HermiteRecurrenceResiduals {
  double multiplication = 0.0;  // 2 s psi_n = sqrt(2(n+1)) psi_{n+1} + sqrt(2n) psi_{n-1}
  double derivative = 0.0;      // 2 psi_n' = -sqrt(2(n+1)) psi_{n+1} + sqrt(2n) psi_{n-1}
};

/// Max residuals over `grid`. The derivative relation uses a central
/// difference of step `step`, so its residual is O(step^2).
HermiteRecurrenceResiduals recurrence_residual(int n, std::span<const double> grid, double step = 1e-4);

/// max |-psi_n'' + s^2 psi_n - (2n+1) psi_n| over `grid`.
double schrodinger_residual(int n, std::span<const double> grid);

/// Composite Simpson integral of psi_n psi_m over [-L, L],
/// L = sqrt(2 max(n,m) + 1) + 10.
double quadrature_overlap(int n, int m, double step = 1e-3);

/// Quadrature Gram matrix of psi_0..psi_{n_max}.
Eigen::MatrixXd gram_matrix(int n_max, double step = 1e-3);

/// Sign changes of psi_n on a fine grid inside the turning region.
int count_sign_changes(int n, int samples = 4001);

std::vector<double> uniform_grid(double lo, double hi, int samples);

}  // namespace dqm
