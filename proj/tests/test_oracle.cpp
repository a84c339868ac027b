#include <doctest.h>

#include "qzeno/analytic.hpp"
#include "qzeno/concurrence.hpp"
#include "qzeno/oracle.hpp"

using namespace qzeno;
using doctest::Approx;

namespace {
const SystemParams kP08(std::sqrt(0.8), std::sqrt(0.2));
}

TEST_CASE("build_hamiltonian structure") {
    const auto h = build_hamiltonian(1.0);
    CHECK(std::abs(h.m(12, 6) - Complex(1.0)) < 1e-14);  // |1100> <-> |0110>
    CHECK(std::abs(h.m(6, 12) - Complex(1.0)) < 1e-14);
    for (int j = 0; j < 16; ++j) CHECK(std::abs(h.m(0, j)) == 0.0);
    CHECK((h.m - h.m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    // only single-exchange couplings, all of magnitude g
    int nonzero = 0;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            if (std::abs(h.m(i, j)) > 0.0) {
                CHECK(std::abs(h.m(i, j)) == Approx(1.0).epsilon(1e-14));
                ++nonzero;
            }
    CHECK(nonzero == 16);  // 8 exchange pairs, both directions
}

TEST_CASE("evolve at t=0 is the identity") {
    const auto h = build_hamiltonian(1.0);
    const auto psi0 = initial_state(kP08);
    const auto psi = evolve(psi0, h, 0.0);
    for (int i = 0; i < 16; ++i)
        CHECK(std::abs(psi.amp[i] - psi0.amp[i]) < 1e-12);
}

TEST_CASE("evolve realizes the entanglement swap") {
    const auto h = build_hamiltonian(kP08.g);
    const auto psi = evolve(initial_state(kP08), h, swap_time(kP08.g));
    PureState16 target;
    target.amp[basis_index(0, 0, 1, 1)] = kP08.alpha0;
    target.amp[basis_index(0, 0, 0, 0)] = -kP08.beta0;
    CHECK(fidelity(psi, target) >= 1.0 - 1e-9);
}

TEST_CASE("evolve matches the closed-form state along the swap interval") {
    const auto h = build_hamiltonian(kP08.g);
    const auto psi0 = initial_state(kP08);
    for (int k = 0; k <= 16; ++k) {
        const double t = swap_time(kP08.g) * k / 16.0;
        const auto reference = evolved_state(kP08, t);
        const auto numeric = evolve(psi0, h, t);
        CHECK(fidelity(reference, numeric) >= 1.0 - 1e-9);
        for (int i = 0; i < 16; ++i)
            CHECK(std::abs(reference.amp[i] - numeric.amp[i]) < 1e-9);
    }
}

TEST_CASE("evolve_rk4 with a fine step reproduces the eigendecomposition") {
    const auto h = build_hamiltonian(1.0);
    const auto psi0 = initial_state(kP08);
    const auto exact = evolve(psi0, h, 0.7);
    const auto numeric = evolve_rk4(psi0, h, 0.7, 1e-4);
    for (int i = 0; i < 16; ++i)
        CHECK(std::abs(exact.amp[i] - numeric.amp[i]) < 1e-10);
}

TEST_CASE("coarse integrator step breaks the oracle tolerance") {
    const auto h = build_hamiltonian(1.0);
    const auto psi0 = initial_state(kP08);
    const auto coarse = evolve_rk4(psi0, h, swap_time(1.0), 1e-1);
    const auto reference = evolved_state(kP08, swap_time(1.0));
    double dev = 0.0;
    for (int i = 0; i < 16; ++i)
        dev = std::max(dev, std::abs(reference.amp[i] - coarse.amp[i]));
    CHECK(dev > 1e-9);
}

// At the swap time itself the sign flip cancels (only even powers of
// sin(gt) survive), so the mutation is caught mid-interval where the
// exchange cross terms carry the sign.
TEST_CASE("flipped Hamiltonian sign fails the amplitude comparison") {
    auto h = build_hamiltonian(kP08.g);
    h.m = -h.m;
    const double t = swap_time(kP08.g) / 2.0;
    const auto psi = evolve(initial_state(kP08), h, t);
    const auto reference = evolved_state(kP08, t);
    double dev = 0.0;
    for (int i = 0; i < 16; ++i)
        dev = std::max(dev, std::abs(reference.amp[i] - psi.amp[i]));
    CHECK(dev > 1e-9);
    CHECK(fidelity(psi, reference) < 1.0 - 1e-9);
}

TEST_CASE("project_null_ab on the null subspace is trivial") {
    PureState16 ground;
    ground.amp[0] = 1.0;
    const auto proj = project_null_ab(ground);
    CHECK(proj.probability == Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(proj.state.amp[0] - Complex(1.0)) < 1e-14);
}

TEST_CASE("project_null_ab at the swap time for the Bell input") {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const SystemParams bell(inv_sqrt2, inv_sqrt2);
    const auto psi = evolved_state(bell, M_PI / 2.0);
    const auto proj = project_null_ab(psi);
    CHECK(proj.probability == Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(proj.state.amp[0]) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("project_null_ab probability matches the closed form") {
    for (double t : {0.2, 0.6, 1.1, 1.5}) {
        const auto psi = evolved_state(kP08, t);
        const auto proj = project_null_ab(psi);
        const double a2 = std::cos(t) * std::cos(t);
        const double b2 = std::sin(t) * std::sin(t);
        const double expected = 1.0 - 0.8 * b2 * (2.0 * a2 + b2);
        CHECK(proj.probability == Approx(expected).epsilon(1e-12));
        CHECK(proj.probability ==
              Approx(0.8 * a2 * a2 + 0.2).epsilon(1e-12));
    }
}

TEST_CASE("project_null_ab flags impossible outcomes") {
    PureState16 excited;
    excited.amp[basis_index(0, 0, 1, 1)] = 1.0;
    CHECK_THROWS_AS(project_null_ab(excited), std::runtime_error);
}

TEST_CASE("projector idempotence") {
    const auto psi = evolved_state(kP08, 0.8);
    const auto once = project_null_ab(psi);
    const auto twice = project_null_ab(once.state);
    CHECK(twice.probability == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("run_zeno_protocol matches the analytic closed form") {
    for (double c0 : {0.2, 0.5, 0.8}) {
        const double a = alpha_from_c0(c0, Branch::Plus);
        const SystemParams p(a, std::sqrt(1.0 - a * a));
        for (long n : {1L, 2L, 5L, 17L, 64L}) {
            const auto oracle = run_zeno_protocol(p, n, swap_time(p.g));
            const auto analytic = zeno_state(p, n);
            CHECK(std::abs(oracle.survival_probability -
                           analytic.survival_probability) < 1e-9);
            CHECK(std::abs(oracle.concurrence - analytic.concurrence) < 1e-9);
        }
    }
}

TEST_CASE("run_zeno_protocol hand-checked survival probabilities") {
    CHECK(run_zeno_protocol(kP08, 1, swap_time(1.0)).survival_probability ==
          Approx(0.2).epsilon(1e-9));
    CHECK(run_zeno_protocol(kP08, 1, swap_time(1.0)).concurrence <= 1e-9);
    CHECK(run_zeno_protocol(kP08, 2, swap_time(1.0)).survival_probability ==
          Approx(0.25).epsilon(1e-9));
}

TEST_CASE("reduce_to_ab on product and initial states") {
    PureState16 prod;
    prod.amp[basis_index(1, 1, 0, 0)] = 1.0;
    const auto rho = reduce_to_ab(prod);
    CHECK(std::abs(rho.entries(3, 3) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(rho.entries.trace() - Complex(1.0)) < 1e-14);

    const auto rho0 = reduce_to_ab(initial_state(kP08));
    CHECK(wootters_concurrence(rho0) == Approx(0.8).epsilon(1e-10));
}

TEST_CASE("reduce_to_ab at the sudden-death onset has zero concurrence") {
    const auto psi = evolved_state(kP08, M_PI / 4.0);
    const auto rho = reduce_to_ab(psi);
    CHECK((rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(rho.entries.trace() - Complex(1.0)) < 1e-12);
    CHECK(wootters_concurrence(rho) <= 1e-10);
    // X-form: only diagonal and |11><00| coherence survive the trace
    CHECK(std::abs(rho.entries(0, 1)) < 1e-14);
    CHECK(std::abs(rho.entries(1, 2)) < 1e-14);
    CHECK(std::abs(rho.entries(2, 3)) < 1e-14);
}

TEST_CASE("unitarity, composition, excitation conservation") {
    const auto h = build_hamiltonian(1.0);
    const auto psi0 = initial_state(kP08);
    const double n0 = total_excitation(psi0);
    for (double t : {0.5, 2.5, 10.0}) {
        const auto psi = evolve(psi0, h, t);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
        CHECK(std::abs(total_excitation(psi) - n0) < 1e-9);
    }
    const auto direct = evolve(psi0, h, 1.3);
    const auto stepped = evolve(evolve(psi0, h, 0.4), h, 0.9);
    for (int i = 0; i < 16; ++i)
        CHECK(std::abs(direct.amp[i] - stepped.amp[i]) < 1e-9);
}
