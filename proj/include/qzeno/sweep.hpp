#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qzeno/analytic.hpp"

namespace qzeno {

enum class Experiment {
    ZenoSweep,
    FreeEvolution,
    SingleMeasurement,
    BellPrep,
    Validate,
};

/// Grid specification driving the CSV experiments. Exactly one of
/// c0_grid or the explicit (alpha0, beta0) pair must be supplied.
struct SweepSpec {
    Experiment experiment = Experiment::ZenoSweep;
    std::vector<double> c0_grid;
    Branch branch = Branch::Plus;
    long n_max = 100;
    int time_points = 201;
    double g = 1.0;
    std::string output_path = "-";
};

/// Rows (N, C_N_minus, C_N_plus) for N = 1..n_max at tau = pi/(2gN).
/// Uses the single entry of c0_grid.
void run_zeno_sweep(const SweepSpec& spec, std::ostream& os);

/// Rows (gt, c0, C_f_plus, C_f_oracle) over gt in [0, pi/2] x c0_grid.
/// The oracle column is evolve -> partial trace -> Wootters.
void run_free_evolution(const SweepSpec& spec, std::ostream& os);

/// Rows (gt, c0, C_1_plus): concurrence after one null measurement at t,
/// computed by the brute-force protocol.
void run_single_measurement(const SweepSpec& spec, std::ostream& os);

struct BellPrepReport {
    double t_star;
    double survival_probability;
    double final_concurrence;
};

/// Runs the single-measurement Bell preparation protocol with the oracle.
BellPrepReport run_bell_prep(const SystemParams& params);

void write_bell_prep(const BellPrepReport& report, std::ostream& os);

}  // namespace qzeno
