#include "qzeno/validate.hpp"

#include <random>

#include "qzeno/analytic.hpp"
#include "qzeno/concurrence.hpp"
#include "qzeno/oracle.hpp"

namespace qzeno {

namespace {

const std::vector<double> kC0Grid = {0.1, 0.2, 0.3, 0.4, 0.5,
                                     0.6, 0.7, 0.8, 0.9};

CheckResult make_result(std::string name, double dev, double tol,
                        bool extra_ok = true) {
    return {std::move(name), dev, tol, extra_ok && dev <= tol};
}

SystemParams params_from_c0(double c0, Branch branch, double g = 1.0) {
    const double a = alpha_from_c0(c0, branch);
    return SystemParams(a, std::sqrt(std::max(0.0, 1.0 - a * a)), g);
}

std::vector<SystemParams> parameter_sets() {
    std::vector<SystemParams> sets;
    for (double c0 : {0.2, 0.5, 0.8, 1.0})
        sets.push_back(params_from_c0(c0, Branch::Plus));
    sets.push_back(params_from_c0(0.6, Branch::Minus));
    return sets;
}

// Max amplitude deviation after aligning the global phase on the largest
// reference amplitude.
double phase_aligned_deviation(const PureState16& ref,
                               const PureState16& test) {
    int pivot = 0;
    for (int i = 1; i < 16; ++i)
        if (std::abs(ref.amp[i]) > std::abs(ref.amp[pivot])) pivot = i;
    Complex phase(1.0, 0.0);
    if (std::abs(test.amp[pivot]) > 0.0)
        phase = ref.amp[pivot] / test.amp[pivot] /
                std::abs(ref.amp[pivot] / test.amp[pivot]);
    double dev = 0.0;
    for (int i = 0; i < 16; ++i)
        dev = std::max(dev, std::abs(ref.amp[i] - phase * test.amp[i]));
    return dev;
}

Eigen::Matrix2cd random_single_qubit_unitary(std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const double theta = 0.5 * angle(rng);
    const Complex ephi = std::polar(1.0, angle(rng));
    const Complex echi = std::polar(1.0, angle(rng));
    Eigen::Matrix2cd u;
    u << ephi * std::cos(theta), echi * std::sin(theta),
        -std::conj(echi) * std::sin(theta), std::conj(ephi) * std::cos(theta);
    return u;
}

TwoQubitPure random_pure_state(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    TwoQubitPure s;
    for (auto& a : s.amp) a = Complex(gauss(rng), gauss(rng));
    const double inv = 1.0 / s.norm();
    for (auto& a : s.amp) a *= inv;
    return s;
}

TwoQubitDensity pure_density(const TwoQubitPure& psi) {
    TwoQubitDensity rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rho.entries(i, j) = psi.amp[i] * std::conj(psi.amp[j]);
    return rho;
}

}  // namespace

namespace checks {

CheckResult swap_identity() {
    const SystemParams params = params_from_c0(0.8, Branch::Plus);
    const auto h = build_hamiltonian(params.g);
    const auto evolved =
        evolve(initial_state(params), h, swap_time(params.g));
    PureState16 target;
    target.amp[basis_index(0, 0, 1, 1)] = params.alpha0;
    target.amp[basis_index(0, 0, 0, 0)] = -params.beta0;
    return make_result("swap_identity", 1.0 - fidelity(evolved, target), 1e-9);
}

CheckResult oracle_vs_analytic_amplitudes() {
    double dev = 0.0;
    for (const auto& params : parameter_sets()) {
        const auto h = build_hamiltonian(params.g);
        const auto psi0 = initial_state(params);
        for (int k = 0; k < 20; ++k) {
            const double t = swap_time(params.g) * (k + 1) / 20.0;
            dev = std::max(dev, phase_aligned_deviation(
                                    evolved_state(params, t),
                                    evolve(psi0, h, t)));
        }
    }
    return make_result("oracle_vs_analytic_amplitudes", dev, 1e-9);
}

CheckResult zeno_protocol_match() {
    double dev = 0.0;
    for (double c0 : {0.2, 0.5, 0.8}) {
        const SystemParams params = params_from_c0(c0, Branch::Plus);
        const double total = swap_time(params.g);
        for (long n = 1; n <= 64; ++n) {
            const auto oracle = run_zeno_protocol(params, n, total);
            const auto analytic = zeno_state(params, n, total);
            dev = std::max(dev, std::abs(oracle.survival_probability -
                                         analytic.survival_probability));
            dev = std::max(dev,
                           std::abs(oracle.concurrence - analytic.concurrence));
            dev = std::max(dev, std::abs(oracle.concurrence -
                                         concurrence_after_n(params, n,
                                                             oracle.tau)));
        }
    }
    return make_result("zeno_protocol_match", dev, 1e-9);
}

CheckResult freezing_limit() {
    double dev_at_largest = 0.0;
    bool decreasing = true;
    const long ns[] = {1000, 10000, 100000, 1000000};
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        for (double c0 : {0.2, 0.5, 0.8}) {
            double prev = 1e9;
            for (long n : ns) {
                const double tau = swap_time(1.0) / static_cast<double>(n);
                const double dev =
                    std::abs(concurrence_branch(c0, n, tau, 1.0, branch) - c0);
                decreasing = decreasing && dev < prev;
                prev = dev;
                if (n == ns[3]) dev_at_largest = std::max(dev_at_largest, dev);
            }
        }
    }
    return make_result("freezing_limit", dev_at_largest, 1e-3, decreasing);
}

CheckResult minus_branch_monotone() {
    double excess = 0.0;
    for (double c0 : kC0Grid) {
        for (long n = 1; n <= 100; ++n) {
            const double tau = swap_time(1.0) / static_cast<double>(n);
            const double c = concurrence_branch(c0, n, tau, 1.0, Branch::Minus);
            excess = std::max(excess, c - c0);
        }
    }
    return make_result("minus_branch_monotone", excess, 1e-12);
}

CheckResult plus_branch_enhancement() {
    bool all_exceed = true;
    for (double c0 : kC0Grid) {
        bool found = false;
        for (long n = 1; n <= 10000 && !found; ++n) {
            const double tau = swap_time(1.0) / static_cast<double>(n);
            found = concurrence_branch(c0, n, tau, 1.0, Branch::Plus) > c0;
        }
        all_exceed = all_exceed && found;
    }
    // c0 = 0.8 reaches near-maximal concurrence at N = 4, oracle-confirmed.
    const SystemParams p08 = params_from_c0(0.8, Branch::Plus);
    const auto oracle = run_zeno_protocol(p08, 4, swap_time(1.0));
    const double tau4 = swap_time(1.0) / 4.0;
    all_exceed = all_exceed && oracle.concurrence >= 0.99 &&
                 concurrence_branch(0.8, 4, tau4, 1.0, Branch::Plus) >= 0.99;
    const double dev = std::abs(
        oracle.concurrence - concurrence_branch(0.8, 4, tau4, 1.0, Branch::Plus));
    return make_result("plus_branch_enhancement", dev, 1e-9, all_exceed);
}

CheckResult bell_preparation() {
    double dev = 0.0;
    const double pairs[][2] = {{0.8, 0.2}, {0.9, 0.1}};
    for (const auto& p : pairs) {
        const SystemParams params(std::sqrt(p[0]), std::sqrt(p[1]));
        const double t_star = bell_prep_time(params);
        const auto outcome = run_zeno_protocol(params, 1, t_star);
        dev = std::max(dev, std::abs(outcome.concurrence - 1.0));
        dev = std::max(dev, std::abs(outcome.survival_probability - 2.0 * p[1]));
    }
    return make_result("bell_preparation", dev, 1e-9);
}

CheckResult sudden_death() {
    const auto t_sd = sudden_death_time(0.8, 1.0);
    double dev = std::abs(t_sd.value() - M_PI / 4.0);
    bool zero_after = dev <= 1e-12;

    // Dead zone: the free concurrence stays at zero up to the swap time.
    for (int k = 0; k <= 100; ++k) {
        const double t =
            t_sd.value() + (swap_time(1.0) - t_sd.value()) * k / 100.0;
        zero_after =
            zero_after && free_concurrence(0.8, t, 1.0, Branch::Plus) <= 1e-12;
    }

    // Full-grid oracle agreement with the closed-form free concurrence.
    double grid_dev = 0.0;
    for (double c0 : kC0Grid) {
        const SystemParams params = params_from_c0(c0, Branch::Plus);
        const auto h = build_hamiltonian(params.g);
        const auto psi0 = initial_state(params);
        for (int k = 0; k < 201; ++k) {
            const double t = swap_time(1.0) * k / 200.0;
            const double oracle =
                wootters_concurrence(reduce_to_ab(evolve(psi0, h, t)));
            grid_dev = std::max(
                grid_dev,
                std::abs(oracle - free_concurrence(c0, t, 1.0, Branch::Plus)));
        }
    }
    return make_result("sudden_death", std::max(dev, grid_dev), 1e-8,
                       zero_after);
}

CheckResult resurrection() {
    const SystemParams params(std::sqrt(0.8), std::sqrt(0.2));
    const auto h = build_hamiltonian(params.g);
    const auto psi0 = initial_state(params);

    // One measurement past the sudden-death time revives the entanglement.
    const auto late = project_null_ab(evolve(psi0, h, 0.9));
    const double c_late = pure_concurrence(extract_ab(late.state));
    const double expected = concurrence_after_n(params, 1, 0.9);
    const bool revived = c_late > 0.9;

    const auto at_star =
        project_null_ab(evolve(psi0, h, bell_prep_time(params)));
    const double c_star = pure_concurrence(extract_ab(at_star.state));

    const double dev =
        std::max(std::abs(c_late - expected), std::abs(c_star - 1.0));
    return make_result("resurrection", dev, 1e-9, revived);
}

CheckResult branch_consistency() {
    double dev = 0.0;
    for (double c0 : kC0Grid) {
        for (Branch branch : {Branch::Plus, Branch::Minus}) {
            const SystemParams params = params_from_c0(c0, branch);
            for (long n = 1; n <= 50; ++n) {
                const double tau = swap_time(1.0) / static_cast<double>(n);
                dev = std::max(
                    dev, std::abs(concurrence_branch(c0, n, tau, 1.0, branch) -
                                  concurrence_after_n(params, n, tau)));
            }
        }
    }
    return make_result("branch_consistency", dev, 1e-12);
}

CheckResult phase_invariance() {
    double dev = 0.0;
    const SystemParams base(std::sqrt(0.8), std::sqrt(0.2));
    const auto ref = zeno_state(base, 4);
    for (double phi : {0.3, 1.1, 2.9}) {
        for (double chi : {0.7, 2.2, 5.1}) {
            const SystemParams rotated(base.alpha0 * std::polar(1.0, phi),
                                       base.beta0 * std::polar(1.0, chi));
            const auto out = zeno_state(rotated, 4);
            dev = std::max(dev, std::abs(out.concurrence - ref.concurrence));
            dev = std::max(dev, std::abs(out.survival_probability -
                                         ref.survival_probability));
            const auto oracle = run_zeno_protocol(rotated, 4, swap_time(1.0));
            dev = std::max(dev, std::abs(oracle.concurrence - ref.concurrence));
        }
    }
    return make_result("phase_invariance", dev, 1e-9);
}

CheckResult g_scaling() {
    double dev = 0.0;
    for (double c0 : {0.3, 0.8}) {
        const double a = alpha_from_c0(c0, Branch::Plus);
        const double b = std::sqrt(1.0 - a * a);
        const SystemParams p1(a, b, 1.0);
        const SystemParams p2(a, b, 2.0);
        for (double gt : {0.4, 1.0, 1.5}) {
            dev = std::max(dev,
                           std::abs(free_concurrence(c0, gt, 1.0, Branch::Plus) -
                                    free_concurrence(c0, gt / 2.0, 2.0,
                                                     Branch::Plus)));
            const auto s1 = evolved_state(p1, gt);
            const auto s2 = evolved_state(p2, gt / 2.0);
            dev = std::max(dev, phase_aligned_deviation(s1, s2));
        }
        const auto z1 = zeno_state(p1, 8);
        const auto z2 = zeno_state(p2, 8);
        dev = std::max(dev, std::abs(z1.concurrence - z2.concurrence));
        dev = std::max(dev,
                       std::abs(z1.survival_probability - z2.survival_probability));
    }
    return make_result("g_scaling", dev, 1e-12);
}

CheckResult hamiltonian_structure() {
    const auto h = build_hamiltonian(1.3);
    double dev = (h.m - h.m.adjoint()).cwiseAbs().maxCoeff();

    // [H, N] = 0 with N the total excitation-number operator.
    Eigen::Matrix<Complex, 16, 16> number =
        Eigen::Matrix<Complex, 16, 16>::Zero();
    for (int i = 0; i < 16; ++i)
        number(i, i) = static_cast<double>(((i >> 3) & 1) + ((i >> 2) & 1) +
                                           ((i >> 1) & 1) + (i & 1));
    dev = std::max(dev,
                   (h.m * number - number * h.m).cwiseAbs().maxCoeff());
    return make_result("hamiltonian_structure", dev, 1e-14);
}

CheckResult unitarity() {
    const SystemParams params = params_from_c0(0.7, Branch::Plus);
    const auto h = build_hamiltonian(params.g);
    const auto psi0 = initial_state(params);
    double dev = 0.0;
    for (int k = 1; k <= 20; ++k) {
        const double t = 10.0 * k / 20.0;
        dev = std::max(dev, std::abs(evolve(psi0, h, t).norm() - 1.0));
    }
    return make_result("unitarity", dev, 1e-10);
}

CheckResult composition() {
    const SystemParams params = params_from_c0(0.5, Branch::Plus);
    const auto h = build_hamiltonian(params.g);
    const auto psi0 = initial_state(params);
    double dev = 0.0;
    for (double t1 : {0.2, 0.9}) {
        for (double t2 : {0.35, 1.4}) {
            const auto direct = evolve(psi0, h, t1 + t2);
            const auto stepped = evolve(evolve(psi0, h, t1), h, t2);
            for (int i = 0; i < 16; ++i)
                dev = std::max(dev,
                               std::abs(direct.amp[i] - stepped.amp[i]));
        }
    }
    return make_result("composition", dev, 1e-9);
}

CheckResult excitation_conservation() {
    const SystemParams params = params_from_c0(0.8, Branch::Plus);
    const auto h = build_hamiltonian(params.g);
    const auto psi0 = initial_state(params);
    const double n0 = total_excitation(psi0);
    double dev = 0.0;
    for (int k = 1; k <= 40; ++k) {
        const double t = 4.0 * k / 40.0;
        dev = std::max(dev, std::abs(total_excitation(evolve(psi0, h, t)) - n0));
    }
    return make_result("excitation_conservation", dev, 1e-9);
}

CheckResult projector_idempotence() {
    const SystemParams params = params_from_c0(0.8, Branch::Plus);
    const auto h = build_hamiltonian(params.g);
    double dev = 0.0;
    for (double t : {0.3, 0.8, 1.2}) {
        const auto once = project_null_ab(evolve(initial_state(params), h, t));
        const auto twice = project_null_ab(once.state);
        dev = std::max(dev, std::abs(twice.probability - 1.0));
        for (int i = 0; i < 16; ++i)
            dev = std::max(dev,
                           std::abs(once.state.amp[i] - twice.state.amp[i]));
    }
    return make_result("projector_idempotence", dev, 1e-12);
}

CheckResult local_unitary_invariance() {
    std::mt19937 rng(20240817);
    const SystemParams params = params_from_c0(0.6, Branch::Plus);
    const auto h = build_hamiltonian(params.g);
    double dev = 0.0;
    for (double t : {0.3, 0.7, 1.1}) {
        const TwoQubitDensity rho =
            reduce_to_ab(evolve(initial_state(params), h, t));
        const double c = wootters_concurrence(rho);
        for (int trial = 0; trial < 30; ++trial) {
            const Eigen::Matrix2cd u1 = random_single_qubit_unitary(rng);
            const Eigen::Matrix2cd u2 = random_single_qubit_unitary(rng);
            Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    u.block<2, 2>(2 * i, 2 * j) = u1(i, j) * u2;
            TwoQubitDensity rotated;
            rotated.entries = u * rho.entries * u.adjoint();
            dev = std::max(dev,
                           std::abs(wootters_concurrence(rotated) - c));
        }
    }
    return make_result("local_unitary_invariance", dev, 1e-9);
}

CheckResult pure_vs_wootters() {
    std::mt19937 rng(7);
    double dev = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const TwoQubitPure psi = random_pure_state(rng);
        dev = std::max(dev, std::abs(wootters_concurrence(pure_density(psi)) -
                                     pure_concurrence(psi)));
    }
    return make_result("pure_vs_wootters", dev, 1e-9);
}

CheckResult x_state_agreement() {
    double dev = 0.0;
    for (double c0 : kC0Grid) {
        const SystemParams params = params_from_c0(c0, Branch::Plus);
        const auto h = build_hamiltonian(params.g);
        const auto psi0 = initial_state(params);
        for (int k = 0; k < 41; ++k) {
            const double t = swap_time(1.0) * k / 40.0;
            const TwoQubitDensity rho = reduce_to_ab(evolve(psi0, h, t));
            dev = std::max(dev, std::abs(wootters_concurrence(rho) -
                                         x_state_concurrence(rho)));
        }
    }
    return make_result("x_state_agreement", dev, 1e-10);
}

}  // namespace checks

std::vector<CheckResult> run_all_checks() {
    return {
        checks::swap_identity(),
        checks::oracle_vs_analytic_amplitudes(),
        checks::zeno_protocol_match(),
        checks::freezing_limit(),
        checks::minus_branch_monotone(),
        checks::plus_branch_enhancement(),
        checks::bell_preparation(),
        checks::sudden_death(),
        checks::resurrection(),
        checks::branch_consistency(),
        checks::phase_invariance(),
        checks::g_scaling(),
        checks::hamiltonian_structure(),
        checks::unitarity(),
        checks::composition(),
        checks::excitation_conservation(),
        checks::projector_idempotence(),
        checks::local_unitary_invariance(),
        checks::pure_vs_wootters(),
        checks::x_state_agreement(),
    };
}

}  // namespace qzeno
