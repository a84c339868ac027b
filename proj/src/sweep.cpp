#include "qzeno/sweep.hpp"

#include <cstdio>

#include "qzeno/concurrence.hpp"
#include "qzeno/oracle.hpp"

namespace qzeno {

namespace {

// Full-precision decimal so identical specs give byte-identical CSV.
std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

SystemParams params_from_c0(double c0, Branch branch, double g) {
    const double a = alpha_from_c0(c0, branch);
    return SystemParams(a, std::sqrt(std::max(0.0, 1.0 - a * a)), g);
}

double single_c0(const SweepSpec& spec) {
    if (spec.c0_grid.size() != 1)
        throw std::invalid_argument("experiment expects exactly one c0 value");
    return spec.c0_grid.front();
}

void check_grid(const SweepSpec& spec) {
    if (spec.c0_grid.empty())
        throw std::invalid_argument("c0 grid must be non-empty");
    if (spec.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (spec.time_points < 2)
        throw std::invalid_argument("time_points must be >= 2");
}

}  // namespace

void run_zeno_sweep(const SweepSpec& spec, std::ostream& os) {
    check_grid(spec);
    const double c0 = single_c0(spec);
    os << "N,C_N_minus,C_N_plus\n";
    for (long n = 1; n <= spec.n_max; ++n) {
        const double tau = swap_time(spec.g) / static_cast<double>(n);
        os << n << ','
           << fmt(concurrence_branch(c0, n, tau, spec.g, Branch::Minus)) << ','
           << fmt(concurrence_branch(c0, n, tau, spec.g, Branch::Plus))
           << '\n';
    }
}

void run_free_evolution(const SweepSpec& spec, std::ostream& os) {
    check_grid(spec);
    const Hamiltonian16 h = build_hamiltonian(spec.g);
    os << "gt,c0,C_f_plus,C_f_oracle\n";
    for (int k = 0; k < spec.time_points; ++k) {
        const double gt = (M_PI / 2.0) * k / (spec.time_points - 1);
        const double t = gt / spec.g;
        for (double c0 : spec.c0_grid) {
            const SystemParams params = params_from_c0(c0, Branch::Plus, spec.g);
            const double analytic = free_concurrence(c0, t, spec.g, Branch::Plus);
            const double oracle = wootters_concurrence(
                reduce_to_ab(evolve(initial_state(params), h, t)));
            os << fmt(gt) << ',' << fmt(c0) << ',' << fmt(analytic) << ','
               << fmt(oracle) << '\n';
        }
    }
}

void run_single_measurement(const SweepSpec& spec, std::ostream& os) {
    check_grid(spec);
    const Hamiltonian16 h = build_hamiltonian(spec.g);
    os << "gt,c0,C_1_plus\n";
    for (int k = 0; k < spec.time_points; ++k) {
        const double gt = (M_PI / 2.0) * k / (spec.time_points - 1);
        const double t = gt / spec.g;
        for (double c0 : spec.c0_grid) {
            const SystemParams params = params_from_c0(c0, Branch::Plus, spec.g);
            const auto proj =
                project_null_ab(evolve(initial_state(params), h, t));
            const double c1 = pure_concurrence(extract_ab(proj.state));
            os << fmt(gt) << ',' << fmt(c0) << ',' << fmt(c1) << '\n';
        }
    }
}

BellPrepReport run_bell_prep(const SystemParams& params) {
    const double t_star = bell_prep_time(params);
    const ZenoOutcome outcome = run_zeno_protocol(params, 1, t_star);
    return {t_star, outcome.survival_probability, outcome.concurrence};
}

void write_bell_prep(const BellPrepReport& report, std::ostream& os) {
    os << "t_star,survival_probability,final_concurrence\n"
       << fmt(report.t_star) << ',' << fmt(report.survival_probability) << ','
       << fmt(report.final_concurrence) << '\n';
}

}  // namespace qzeno
