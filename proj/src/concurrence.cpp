#include "qzeno/concurrence.hpp"

#include <algorithm>

namespace qzeno {

namespace {

constexpr double kPsdFloor = -1e-10;

void check_density(const Eigen::Matrix4cd& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 ||
        std::abs(rho.trace().imag()) > 1e-12)
        throw std::invalid_argument("density matrix trace is not 1");
}

}  // namespace

double pure_concurrence(const TwoQubitPure& state) {
    if (std::abs(state.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("pure_concurrence: state not normalized");
    const Complex det =
        state.amp[0] * state.amp[3] - state.amp[1] * state.amp[2];
    return std::min(1.0, 2.0 * std::abs(det));
}

double wootters_concurrence(const TwoQubitDensity& rho) {
    check_density(rho.entries);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.entries);
    Eigen::Vector4d evals = es.eigenvalues();
    const double scale = std::max(0.0, evals.maxCoeff());
    for (int i = 0; i < 4; ++i) {
        if (evals(i) < kPsdFloor)
            throw std::invalid_argument(
                "wootters_concurrence: density matrix is not PSD");
        // roundoff-scale eigenvalues would pollute sqrt(rho) with 1e-8 noise
        if (evals(i) < 1e-14 * scale) evals(i) = 0.0;
    }
    const Eigen::Matrix4cd sqrt_rho =
        es.eigenvectors() *
        evals.cwiseSqrt().cast<Complex>().asDiagonal() *
        es.eigenvectors().adjoint();

    // The lambdas are the singular values of B = sqrt(rho) S sqrt(rho)*
    // with S the spin-flip: B B^dag is the Hermitian similarity transform
    // sqrt(rho) rho~ sqrt(rho), so its singular values are the decreasing
    // square roots of the eigenvalues of rho * rho~, with no square-root
    // amplification of eigensolver noise.
    Eigen::Matrix4cd s_flip = Eigen::Matrix4cd::Zero();
    static const int perm[4] = {3, 2, 1, 0};
    static const double sign[4] = {-1.0, 1.0, 1.0, -1.0};
    for (int i = 0; i < 4; ++i) s_flip(i, perm[i]) = sign[i];
    const Eigen::Matrix4cd b = sqrt_rho * s_flip * sqrt_rho.conjugate();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(b);
    const Eigen::Vector4d lam = svd.singularValues();  // sorted descending

    const double c = lam(0) - lam(1) - lam(2) - lam(3);
    return std::min(1.0, std::max(0.0, c));
}

double x_state_concurrence(const TwoQubitDensity& rho) {
    check_density(rho.entries);
    const auto& r = rho.entries;
    const double t1 = std::abs(r(0, 3)) -
                      std::sqrt(std::max(0.0, r(1, 1).real() * r(2, 2).real()));
    const double t2 = std::abs(r(1, 2)) -
                      std::sqrt(std::max(0.0, r(0, 0).real() * r(3, 3).real()));
    return std::min(1.0, 2.0 * std::max({0.0, t1, t2}));
}

}  // namespace qzeno
