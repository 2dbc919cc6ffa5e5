#pragma once

#include <cstdint>

#include "cli/report.hpp"
#include "dqm/cayley.hpp"

namespace dqm::cli {

/// Runs the invariant suite of every module at desk scale. Random sweeps
/// draw from a generator seeded with `seed`, so equal seeds give equal
/// reports.
VerificationReport verify_all(std::uint64_t seed);

/// Identity/residual table for one (H, A0, tau, n). The H^2 = 1 identities
/// are appended when H is an involution.
VerificationReport heisenberg_report(const HermitianOperator& hamiltonian, const ComplexMatrix& a0,
                                     double tau, long n, double tolerance = 1e-10);

/// Appends scheme rows; non-required rows become info rows.
void append_scheme_checks(VerificationReport& report, const std::vector<SchemeCheck>& checks,
                          const std::string& params);

}  // namespace dqm::cli
