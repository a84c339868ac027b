#include <doctest.h>

#include <random>

#include "qzeno/analytic.hpp"
#include "qzeno/concurrence.hpp"
#include "qzeno/oracle.hpp"

using namespace qzeno;
using doctest::Approx;

namespace {

TwoQubitPure make_pure(Complex a00, Complex a01, Complex a10, Complex a11) {
    TwoQubitPure s;
    s.amp = {a00, a01, a10, a11};
    return s;
}

TwoQubitDensity density_of(const TwoQubitPure& psi) {
    TwoQubitDensity rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rho.entries(i, j) = psi.amp[i] * std::conj(psi.amp[j]);
    return rho;
}

}  // namespace

TEST_CASE("pure_concurrence on Bell, product and partially entangled states") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(pure_concurrence(make_pure(s, 0, 0, s)) == Approx(1.0).epsilon(1e-12));
    CHECK(pure_concurrence(make_pure(0, 0, 1, 0)) <= 1e-12);
    CHECK(pure_concurrence(make_pure(std::sqrt(0.2), 0, 0, std::sqrt(0.8))) ==
          Approx(0.8).epsilon(1e-12));
}

TEST_CASE("pure_concurrence rejects non-normalized input") {
    CHECK_THROWS_AS(pure_concurrence(make_pure(1.0, 0, 0, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("wootters_concurrence on simple densities") {
    TwoQubitDensity mixed;
    mixed.entries = 0.25 * Eigen::Matrix4cd::Identity();
    CHECK(wootters_concurrence(mixed) <= 1e-12);

    const double s = 1.0 / std::sqrt(2.0);
    CHECK(wootters_concurrence(density_of(make_pure(s, 0, 0, s))) ==
          Approx(1.0).epsilon(1e-10));
}

TEST_CASE("wootters_concurrence rejects malformed densities") {
    TwoQubitDensity bad;
    bad.entries = Eigen::Matrix4cd::Zero();
    bad.entries(0, 1) = Complex(0.3, 0.1);  // not Hermitian
    bad.entries(0, 0) = 1.0;
    CHECK_THROWS_AS(wootters_concurrence(bad), std::invalid_argument);

    TwoQubitDensity negative;
    negative.entries = Eigen::Matrix4cd::Zero();
    negative.entries(0, 0) = 1.5;
    negative.entries(1, 1) = -0.5;  // eigenvalue below the clamp threshold
    CHECK_THROWS_AS(wootters_concurrence(negative), std::invalid_argument);
}

TEST_CASE("wootters agrees with pure_concurrence on random pure states") {
    std::mt19937 rng(42);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        TwoQubitPure psi;
        for (auto& a : psi.amp) a = Complex(gauss(rng), gauss(rng));
        const double inv = 1.0 / psi.norm();
        for (auto& a : psi.amp) a *= inv;
        CHECK(std::abs(wootters_concurrence(density_of(psi)) -
                       pure_concurrence(psi)) < 1e-9);
    }
}

TEST_CASE("wootters matches the X-state closed form on reduced states") {
    for (double c0 : {0.2, 0.5, 0.8}) {
        const double a = alpha_from_c0(c0, Branch::Plus);
        const SystemParams p(a, std::sqrt(1.0 - a * a));
        for (int k = 0; k <= 20; ++k) {
            const double t = swap_time(1.0) * k / 20.0;
            const auto rho = reduce_to_ab(evolved_state(p, t));
            CHECK(std::abs(wootters_concurrence(rho) -
                           x_state_concurrence(rho)) < 1e-10);
        }
    }
}

TEST_CASE("wootters on reduced evolution matches free_concurrence") {
    for (double c0 : {0.3, 0.8}) {
        const double a = alpha_from_c0(c0, Branch::Plus);
        const SystemParams p(a, std::sqrt(1.0 - a * a));
        for (int k = 0; k <= 40; ++k) {
            const double t = swap_time(1.0) * k / 40.0;
            const auto rho = reduce_to_ab(evolved_state(p, t));
            CHECK(std::abs(wootters_concurrence(rho) -
                           free_concurrence(c0, t, 1.0, Branch::Plus)) < 1e-8);
        }
    }
}
