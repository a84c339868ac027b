#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qzeno {

using Complex = std::complex<double>;

// Tolerance for identities that hold in exact arithmetic.
inline constexpr double kExactTol = 1e-12;
// Tolerance for numerical-evolution vs closed-form comparisons.
inline constexpr double kOracleTol = 1e-9;

/// Index of the basis ket |n_a, n_b, n_A, n_B> with (a, b, A, B)
/// most-significant-first. All modules index through this function.
constexpr int basis_index(int n_a, int n_b, int n_A, int n_B) {
    return 8 * n_a + 4 * n_b + 2 * n_A + n_B;
}

/// Physical configuration: initial amplitudes of alpha|11> + beta|00> on
/// the ab pair and the exchange coupling g shared by both qubit pairs.
struct SystemParams {
    Complex alpha0;
    Complex beta0;
    double g;

    SystemParams(Complex alpha, Complex beta, double coupling = 1.0)
        : alpha0(alpha), beta0(beta), g(coupling) {
        const double norm2 = std::norm(alpha0) + std::norm(beta0);
        if (std::abs(norm2 - 1.0) > kExactTol)
            throw std::invalid_argument(
                "SystemParams: |alpha0|^2 + |beta0|^2 must be 1");
        if (!(g > 0.0))
            throw std::invalid_argument("SystemParams: g must be positive");
    }
};

/// Full state vector of the four-qubit register.
struct PureState16 {
    std::array<Complex, 16> amp{};

    double norm() const {
        double s = 0.0;
        for (const auto& a : amp) s += std::norm(a);
        return std::sqrt(s);
    }
};

/// State of one qubit pair, index = 2*n1 + n2.
struct TwoQubitPure {
    std::array<Complex, 4> amp{};

    double norm() const {
        double s = 0.0;
        for (const auto& a : amp) s += std::norm(a);
        return std::sqrt(s);
    }
};

/// 4x4 density matrix of a qubit pair, rows/cols ordered like TwoQubitPure.
struct TwoQubitDensity {
    Eigen::Matrix4cd entries = Eigen::Matrix4cd::Zero();
};

/// Result of a post-selected sequence of null-outcome measurements.
struct ZenoOutcome {
    TwoQubitPure ab_state;
    double survival_probability = 0.0;
    double concurrence = 0.0;
    long n_measurements = 0;
    double tau = 0.0;
};

inline Complex inner(const PureState16& x, const PureState16& y) {
    Complex s = 0.0;
    for (int i = 0; i < 16; ++i) s += std::conj(x.amp[i]) * y.amp[i];
    return s;
}

/// |<x|y>|, the phase-insensitive overlap used for state comparisons.
inline double fidelity(const PureState16& x, const PureState16& y) {
    return std::abs(inner(x, y));
}

}  // namespace qzeno
