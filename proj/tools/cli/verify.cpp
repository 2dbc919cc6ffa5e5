#include "cli/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <iomanip>
#include <sstream>

#include "dqm/hermite.hpp"
#include "dqm/kravchuk_wigner.hpp"
#include "dqm/lattice.hpp"
#include "dqm/oscillator.hpp"
#include "dqm/planewave.hpp"
#include "dqm/sampling.hpp"

namespace dqm::cli {

namespace {

std::string params_of(std::initializer_list<std::pair<const char*, std::string>> items) {
  std::string out;
  for (const auto& [key, value] : items) {
    if (!out.empty()) out += ';';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}
std::string num(int v) { return std::to_string(v); }

ComplexMatrix pauli(char axis) {
  ComplexMatrix m(2, 2);
  const std::complex<double> i{0.0, 1.0};
  switch (axis) {
    case 'x':
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 'y':
      m << 0.0, -i, i, 0.0;
      break;
    default:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

void lattice_and_basis(VerificationReport& report, std::mt19937_64& rng) {
  for (double eps : {0.1, 1.0, 10.0}) {
    double gram = 0.0;
    double dft = 0.0;
    double eigen = 0.0;
    for (std::size_t n = 1; n <= 64; ++n) {
      const PlaneWaveBasis basis(n, eps);
      gram = std::max(gram, basis.gram_defect());
      dft = std::max(dft, basis.dft_defect());
      for (std::size_t m = 0; m < n; ++m) {
        if (basis.is_singular(m)) continue;
        const LatticeState col = basis.column(m);
        const LatticeState out = momentum_apply(basis, col);
        const Complex lambda = basis.momentum_eigenvalue(m);
        double r = 0.0;
        for (std::size_t j = 0; j < n; ++j) r += std::norm(out[j] - lambda * col[j]);
        eigen = std::max(eigen, std::sqrt(r));
      }
    }
    const auto p = params_of({{"N", "1..64"}, {"epsilon", num(eps)}});
    report.add_bound("basis_gram", p, gram, 1e-12);
    report.add_bound("basis_dft_identity", p, dft, 1e-12);
    report.add_bound("momentum_eigenrelation", p, eigen, 1e-10 * std::max(1.0, 1.0 / eps));
  }

  double roundtrip = 0.0;
  double parseval = 0.0;
  double hermitian_x = 0.0;
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 33u, 64u}) {
    const PlaneWaveBasis basis(n, 0.5);
    for (int trial = 0; trial < 100; ++trial) {
      const LatticeState f = random_state(n, 0.5, rng);
      const auto a = forward_transform(basis, f);
      const LatticeState back = inverse_transform(basis, a);
      double err = 0.0;
      double energy = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        err = std::max(err, std::abs(back[j] - f[j]));
        energy += std::norm(a[j]);
      }
      roundtrip = std::max(roundtrip, err);
      parseval = std::max(parseval, std::abs(energy - f.norm_squared()) / f.norm_squared());
      const LatticeState g = random_state(n, 0.5, rng);
      hermitian_x = std::max(hermitian_x, std::abs(inner_product(f, position_apply(g)) -
                                                    inner_product(position_apply(f), g)));
    }
  }
  report.add_bound("fourier_roundtrip", params_of({{"trials", "100"}}), roundtrip, 1e-12);
  report.add_bound("parseval_relative", params_of({{"trials", "100"}}), parseval, 1e-12);
  report.add_bound("position_hermitian", params_of({{"trials", "100"}}), hermitian_x, 1e-10);
}

void cayley(VerificationReport& report, std::mt19937_64& rng) {
  double drift = 0.0;
  double schrodinger = 0.0;
  double operator_residual = 0.0;
  double half = 0.0;
  for (Eigen::Index d : {2, 4, 8}) {
    for (double tau : {1.0, 0.1, 0.01}) {
      const CayleyPropagator prop(random_hermitian(d, rng), tau);
      const ComplexVector psi0 = random_vector(d, rng).normalized();
      const auto traj = evolve_trajectory(prop, psi0, 100);
      for (const auto& psi : traj) drift = std::max(drift, std::abs(psi.norm() - 1.0));
      schrodinger = std::max(schrodinger, schrodinger_residual(prop, traj));
      for (long n = 0; n <= 20; ++n) {
        operator_residual = std::max(operator_residual, evolution_operator_residual(prop, n));
      }
      half = std::max(half, operator_norm(prop.half_step() * prop.half_step() - prop.step()));
    }
  }
  const auto p = params_of({{"d", "2,4,8"}, {"tau", "1,0.1,0.01"}, {"steps", "100"}});
  report.add_bound("cayley_norm_drift", p, drift, 1e-10);
  report.add_bound("schrodinger_difference_residual", p, schrodinger, 1e-10);
  report.add_bound("evolution_operator_residual", p, operator_residual, 1e-10);
  report.add_bound("half_step_square", p, half, 1e-12);

  // Second-order approach to exp(-iHt) at t = 1.
  const HermitianOperator h = random_hermitian(4, rng);
  double worst_ratio_gap = 0.0;
  double previous = 0.0;
  for (long steps : {10L, 20L, 40L}) {
    const CayleyPropagator prop(h, 1.0 / steps);
    const double err = operator_norm(prop.evolution(steps) - exact_propagator(h, 1.0));
    if (previous > 0.0) worst_ratio_gap = std::max(worst_ratio_gap, std::abs(previous / err - 4.0));
    previous = err;
  }
  report.add_bound("cayley_second_order_ratio_gap", params_of({{"t", "1"}, {"steps", "10,20,40"}}),
                   worst_ratio_gap, 0.5);

  const CayleyPropagator pauli_prop(HermitianOperator(pauli('z')), 0.05);
  append_scheme_checks(report, heisenberg_scheme_residuals(pauli_prop, pauli('x'), 3),
                       params_of({{"H", "sigma_z"}, {"A0", "sigma_x"}, {"tau", "0.05"}, {"n", "3"}}));
  const HermitianOperator rh = random_hermitian(5, rng);
  const HermitianOperator ra = random_hermitian(5, rng);
  const CayleyPropagator random_prop(rh, 0.1);
  append_scheme_checks(report, heisenberg_scheme_residuals(random_prop, ra.matrix(), 4),
                       params_of({{"H", "random5"}, {"A0", "random5"}, {"tau", "0.1"}, {"n", "4"}}));

  const HermitianOperator involution = random_involution(4, rng);
  const ComplexMatrix observable = random_hermitian(4, rng).matrix();
  for (double tau : {0.2, 0.05}) {
    append_scheme_checks(report, involution_identities(HermitianOperator(pauli('x')), pauli('z'), tau, 2),
                         params_of({{"H", "sigma_x"}, {"A0", "sigma_z"}, {"tau", num(tau)}, {"n", "2"}}));
    append_scheme_checks(report, involution_identities(HermitianOperator(pauli('z')), pauli('x'), tau, 2),
                         params_of({{"H", "sigma_z"}, {"A0", "sigma_x"}, {"tau", num(tau)}, {"n", "2"}}));
    append_scheme_checks(report, involution_identities(involution, observable, tau, 2),
                         params_of({{"H", "involution4"}, {"A0", "random4"}, {"tau", num(tau)}, {"n", "2"}}));
  }
}

void wigner(VerificationReport& report) {
  for (double beta : {0.3, 0.5 * std::numbers::pi, 2.5}) {
    double oracle = 0.0, symmetry = 0.0, ortho = 0.0, three = 0.0, shift = 0.0;
    for (int n : {1, 2, 3, 5, 10, 20, 30, 40}) {
      const WignerDMatrix d(n, beta);
      oracle = std::max(oracle, direct_sum_defect(d));
      symmetry = std::max(symmetry, symmetry_defect(d));
      ortho = std::max(ortho, orthogonality_defect(d));
      const auto rec = recurrence_residuals(d);
      three = std::max(three, rec.three_term);
      shift = std::max(shift, rec.column_shift);
    }
    const auto p = params_of({{"N", "1..40"}, {"beta", num(beta)}});
    report.add_bound("wigner_direct_sum", p, oracle, 1e-10);
    report.add_bound("wigner_symmetry", p, symmetry, 1e-12);
    report.add_bound("wigner_orthogonality", p, ortho, 1e-10);
    report.add_bound("wigner_three_term_recurrence", p, three, 1e-10);
    report.add_bound("wigner_column_shift_recurrence", p, shift, 1e-10);
  }
  const WignerDMatrix d(10, 1.0);
  const double coarse = differential_relation_residual(d, LadderSign::Raise, 2e-3);
  const double fine = differential_relation_residual(d, LadderSign::Raise, 1e-3);
  report.add_bound("wigner_differential_order_gap", params_of({{"N", "10"}, {"beta", "1"}, {"h", "2e-3,1e-3"}}),
                   std::abs(coarse / fine - 4.0), 0.2);
  const KravchukFamily family(20, 0.3);
  report.add_bound("kravchuk_orthogonality", params_of({{"N", "20"}, {"p", "0.3"}}),
                   family.orthogonality_defect(), 1e-10);
}

void oscillator(VerificationReport& report) {
  double commutator = 0.0, energy = 0.0, trace = 0.0;
  long long trace_numerator = 0;
  for (int n = 1; n <= 200; ++n) {
    const OscillatorModel model(n);
    commutator = std::max(commutator, commutator_defect(model));
    energy = std::max(energy, energy_defect(model));
    trace = std::max(trace, std::abs(commutator_trace(model)));
    trace_numerator = std::max(trace_numerator, std::llabs(commutator_trace_numerator(model)));
  }
  const auto p = params_of({{"N", "1..200"}, {"p", "0.5"}});
  report.add_bound("commutator_spectrum", p, commutator, 1e-10);
  report.add_bound("anticommutator_spectrum", p, energy, 1e-10);
  report.add_bound("commutator_trace", p, trace, 1e-12);
  report.add_bound("commutator_trace_integer", p, static_cast<double>(trace_numerator), 0.5);

  double position = 0.0, vectors = 0.0;
  for (int n = 1; n <= 60; ++n) {
    const OscillatorModel model(n);
    position = std::max(position, position_spectrum_defect(position_spectrum(model)));
    vectors = std::max(vectors, position_eigenvector_residual(model));
  }
  report.add_bound("position_spectrum", params_of({{"N", "1..60"}}), position, 1e-9);
  report.add_bound("position_eigenvectors", params_of({{"N", "1..60"}}), vectors, 1e-9);

  const std::vector<int> sizes{16, 32, 64, 128, 256};
  for (int level = 0; level <= 3; ++level) {
    const auto table = continuum_convergence(level, sizes);
    const auto lp = params_of({{"n", num(level)}, {"N", "16..256"}});
    report.add_minimum("continuum_fitted_order", lp, table.fitted_order(), 0.9);
    report.add_bound("continuum_monotone_violations", lp, table.strictly_decreasing() ? 0.0 : 1.0, 0.5);
    const auto ladder = ladder_limit_check(level, sizes);
    int violations = 0;
    for (std::size_t i = 1; i < ladder.size(); ++i) {
      if (level > 0 && !(ladder[i].lowering_error < ladder[i - 1].lowering_error)) ++violations;
      if (!(ladder[i].raising_error < ladder[i - 1].raising_error)) ++violations;
    }
    report.add_bound("ladder_limit_monotone_violations", lp, violations, 0.5);
    const auto rec = limit_recurrence_check(OscillatorModel(64), level);
    report.add_bound("limit_recurrence_three_term", params_of({{"n", num(level)}, {"N", "64"}}), rec.three_term, 1e-9);
    report.add_bound("limit_recurrence_difference", params_of({{"n", num(level)}, {"N", "64"}}), rec.difference, 1e-9);
  }
}

void hermite(VerificationReport& report) {
  const auto grid = uniform_grid(-6.0, 6.0, 121);
  double schrodinger = 0.0, multiplication = 0.0;
  for (int n = 0; n <= 10; ++n) {
    schrodinger = std::max(schrodinger, schrodinger_residual(n, grid));
    multiplication = std::max(multiplication, recurrence_residual(n, grid).multiplication);
  }
  report.add_bound("hermite_schrodinger", params_of({{"n", "0..10"}, {"s", "[-6,6]"}}), schrodinger, 1e-10);
  report.add_bound("hermite_multiplication_recurrence", params_of({{"n", "0..10"}, {"s", "[-6,6]"}}),
                   multiplication, 1e-12);
  const auto coarse = recurrence_residual(3, grid, 2e-3).derivative;
  const auto fine = recurrence_residual(3, grid, 1e-3).derivative;
  report.add_bound("hermite_derivative_order_gap", params_of({{"n", "3"}, {"h", "2e-3,1e-3"}}),
                   std::abs(coarse / fine - 4.0), 0.2);
  const Eigen::MatrixXd gram = gram_matrix(6);
  report.add_bound("hermite_gram", params_of({{"n", "0..6"}}),
                   (gram - Eigen::MatrixXd::Identity(7, 7)).cwiseAbs().maxCoeff(), 1e-8);
}

}  // namespace

void append_scheme_checks(VerificationReport& report, const std::vector<SchemeCheck>& checks,
                          const std::string& params) {
  for (const auto& c : checks) {
    std::string p = params;
    if (c.exponent) p += ";exponent=" + num(*c.exponent);
    if (c.fitted_exponent) p += ";fitted_exponent=" + num(*c.fitted_exponent);
    if (c.required) {
      report.add_bound(c.name, p, c.residual, c.tolerance);
    } else {
      report.add_info(c.name, p, c.residual, c.tolerance);
    }
  }
}

VerificationReport heisenberg_report(const HermitianOperator& hamiltonian, const ComplexMatrix& a0,
                                     double tau, long n, double tolerance) {
  VerificationReport report;
  const CayleyPropagator prop(hamiltonian, tau);
  const std::string params = "tau=" + num(tau) + ";n=" + std::to_string(n);
  append_scheme_checks(report, heisenberg_scheme_residuals(prop, a0, n, tolerance), params);
  const ComplexMatrix& h = hamiltonian.matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(h.rows(), h.cols());
  if (operator_norm(h * h - id) < 1e-12) {
    append_scheme_checks(report, involution_identities(hamiltonian, a0, tau, n, tolerance),
                         params + ";case=H^2=1");
  }
  return report;
}

VerificationReport verify_all(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  VerificationReport report;
  lattice_and_basis(report, rng);
  cayley(report, rng);
  wigner(report);
  oscillator(report);
  hermite(report);
  return report;
}

}  // namespace dqm::cli
