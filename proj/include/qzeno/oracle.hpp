#pragma once

#include "qzeno/core.hpp"

namespace qzeno {

/// Exchange-coupling Hamiltonian of the two qubit pairs (hbar = 1):
/// H = g (s+_a s-_A + s-_a s+_A) + g (s+_b s-_B + s-_b s+_B).
struct Hamiltonian16 {
    Eigen::Matrix<Complex, 16, 16> m = Eigen::Matrix<Complex, 16, 16>::Zero();
};

Hamiltonian16 build_hamiltonian(double g);

/// exp(-iHt)|state> via exact eigendecomposition of the Hermitian matrix.
PureState16 evolve(const PureState16& state, const Hamiltonian16& h, double t);

/// Fixed-step RK4 fallback integrator. Step dt must be <= 1e-4/g for the
/// 1e-9 comparisons against the closed forms to hold; coarser steps are
/// allowed (used by tolerance-sensitivity tests) but not accurate.
PureState16 evolve_rk4(const PureState16& state, const Hamiltonian16& h,
                       double t, double dt);

struct NullProjection {
    PureState16 state;  // renormalized projection onto n_A = n_B = 0
    double probability;
};

/// Ideal von Neumann projection onto the no-excitation-in-AB subspace.
/// Throws if the null outcome has probability below 1e-15.
NullProjection project_null_ab(const PureState16& state);

/// Initial ket (alpha|11> + beta|00>)_ab |00>_AB.
PureState16 initial_state(const SystemParams& params);

/// Brute-force protocol: alternate free evolution over tau = total_time/n
/// and a null-result projection, n times. Survival probability is the
/// product of the per-step null probabilities.
ZenoOutcome run_zeno_protocol(const SystemParams& params, long n,
                              double total_time);

/// Extract the (pure) ab factor of a state supported on n_A = n_B = 0.
TwoQubitPure extract_ab(const PureState16& state);

/// Partial trace over the A,B pair.
TwoQubitDensity reduce_to_ab(const PureState16& state);

/// Expectation of the total excitation number n_a + n_b + n_A + n_B.
double total_excitation(const PureState16& state);

}  // namespace qzeno
