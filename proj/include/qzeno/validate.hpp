#pragma once

#include <string>
#include <vector>

#include "qzeno/core.hpp"

namespace qzeno {

/// One cross-validation check: the worst deviation observed across its
/// internal grid, and the tolerance it must stay under.
struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

namespace checks {

CheckResult swap_identity();
CheckResult oracle_vs_analytic_amplitudes();
CheckResult zeno_protocol_match();
CheckResult freezing_limit();
CheckResult minus_branch_monotone();
CheckResult plus_branch_enhancement();
CheckResult bell_preparation();
CheckResult sudden_death();
CheckResult resurrection();
CheckResult branch_consistency();
CheckResult phase_invariance();
CheckResult g_scaling();
CheckResult hamiltonian_structure();
CheckResult unitarity();
CheckResult composition();
CheckResult excitation_conservation();
CheckResult projector_idempotence();
CheckResult local_unitary_invariance();
CheckResult pure_vs_wootters();
CheckResult x_state_agreement();

}  // namespace checks

/// Runs the full oracle-vs-analytic invariant suite.
std::vector<CheckResult> run_all_checks();

}  // namespace qzeno
