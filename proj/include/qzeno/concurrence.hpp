#pragma once

#include "qzeno/core.hpp"

namespace qzeno {

/// 2|a00 a11 - a01 a10| for a normalized two-qubit pure state.
double pure_concurrence(const TwoQubitPure& state);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), the li being the
/// decreasing square roots of the eigenvalues of rho * rho~. Computed
/// through the Hermitian product sqrt(rho) rho~ sqrt(rho).
double wootters_concurrence(const TwoQubitDensity& rho);

/// Closed form 2 max(0, |rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44))
/// valid for X-form density matrices; cross-check route for wootters_concurrence.
double x_state_concurrence(const TwoQubitDensity& rho);

}  // namespace qzeno
