#pragma once

#include <optional>

#include "qzeno/core.hpp"

namespace qzeno {

/// a(t) = cos(gt), b(t) = sin(gt).
struct EvolutionCoefficients {
    double a;
    double b;
    double t;
};

/// Which of |alpha0| >= |beta0| (Plus) or |alpha0| <= |beta0| (Minus)
/// the initial state satisfies. The branches coincide at c0 = 1.
enum class Branch { Plus, Minus };

EvolutionCoefficients evolution_coefficients(double g, double t);

/// Default total evolution time, the entanglement swap time pi/(2g).
inline double swap_time(double g) { return M_PI / (2.0 * g); }

/// Closed-form free evolution of (alpha|11> + beta|00>)_ab |00>_AB.
PureState16 evolved_state(const SystemParams& params, double t);

/// Post-selected state and survival probability after n null-result
/// measurements spaced tau = total_time / n apart.
ZenoOutcome zeno_state(const SystemParams& params, long n, double total_time);
ZenoOutcome zeno_state(const SystemParams& params, long n);

/// Concurrence of the ab pair after n null measurements at spacing tau.
double concurrence_after_n(const SystemParams& params, long n, double tau);

/// |alpha0| reconstructed from the initial concurrence on the given branch.
double alpha_from_c0(double c0, Branch branch);

/// Concurrence after n measurements, written as a function of the initial
/// concurrence alone.
double concurrence_branch(double c0, long n, double tau, double g,
                          Branch branch);

/// Concurrence of the freely evolving ab pair, max(0, Lambda(t)).
double free_concurrence(double c0, double t, double g, Branch branch);

/// Time at which the free ab concurrence first reaches zero, on the
/// |alpha0| > |beta0| branch. Returns nullopt for c0 = 1 (the concurrence
/// only vanishes at the swap time itself; no sudden death occurs).
std::optional<double> sudden_death_time(double c0, double g);

/// Measurement time that turns alpha|11> + beta|00> (|alpha| > |beta| > 0)
/// into a Bell state with a single null-result measurement.
double bell_prep_time(const SystemParams& params);

}  // namespace qzeno
