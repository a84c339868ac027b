#include "qzeno/analytic.hpp"

#include "qzeno/concurrence.hpp"

namespace qzeno {

namespace {

// cos^{2n}(g tau); the even power makes the sign of the cosine irrelevant.
double cos_pow_2n(double g, double tau, long n) {
    const double c2 = std::cos(g * tau) * std::cos(g * tau);
    return std::pow(c2, static_cast<double>(n));
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

EvolutionCoefficients evolution_coefficients(double g, double t) {
    return {std::cos(g * t), std::sin(g * t), t};
}

PureState16 evolved_state(const SystemParams& params, double t) {
    if (t < 0.0) throw std::invalid_argument("evolved_state: t must be >= 0");
    const auto [a, b, _] = evolution_coefficients(params.g, t);
    const Complex i(0.0, 1.0);
    PureState16 psi;
    psi.amp[basis_index(1, 1, 0, 0)] = params.alpha0 * a * a;
    psi.amp[basis_index(0, 0, 0, 0)] = params.beta0;
    psi.amp[basis_index(1, 0, 0, 1)] = -i * params.alpha0 * a * b;
    psi.amp[basis_index(0, 1, 1, 0)] = -i * params.alpha0 * a * b;
    psi.amp[basis_index(0, 0, 1, 1)] = -params.alpha0 * b * b;
    return psi;
}

ZenoOutcome zeno_state(const SystemParams& params, long n, double total_time) {
    if (n < 1) throw std::invalid_argument("zeno_state: n must be >= 1");
    if (!(total_time > 0.0))
        throw std::invalid_argument("zeno_state: total_time must be > 0");
    const double tau = total_time / static_cast<double>(n);
    const double c2n = cos_pow_2n(params.g, tau, n);

    ZenoOutcome out;
    out.n_measurements = n;
    out.tau = tau;
    out.survival_probability =
        std::norm(params.alpha0) * c2n * c2n + std::norm(params.beta0);
    const double inv_norm = 1.0 / std::sqrt(out.survival_probability);
    out.ab_state.amp[3] = params.alpha0 * c2n * inv_norm;  // |11>
    out.ab_state.amp[0] = params.beta0 * inv_norm;         // |00>
    out.concurrence = pure_concurrence(out.ab_state);
    return out;
}

ZenoOutcome zeno_state(const SystemParams& params, long n) {
    return zeno_state(params, n, swap_time(params.g));
}

double concurrence_after_n(const SystemParams& params, long n, double tau) {
    if (n < 1)
        throw std::invalid_argument("concurrence_after_n: n must be >= 1");
    if (tau < 0.0)
        throw std::invalid_argument("concurrence_after_n: tau must be >= 0");
    const double c2n = cos_pow_2n(params.g, tau, n);
    const double am = std::abs(params.alpha0);
    const double bm = std::abs(params.beta0);
    return 2.0 * am * bm * c2n / (am * am * c2n * c2n + bm * bm);
}

double alpha_from_c0(double c0, Branch branch) {
    if (c0 < 0.0 || c0 > 1.0)
        throw std::invalid_argument("alpha_from_c0: c0 must lie in [0, 1]");
    const double root = std::sqrt((1.0 - c0 * c0) / 4.0);
    return branch == Branch::Plus ? std::sqrt(0.5 + root)
                                  : std::sqrt(0.5 - root);
}

double concurrence_branch(double c0, long n, double tau, double g,
                          Branch branch) {
    if (c0 < 0.0 || c0 > 1.0)
        throw std::invalid_argument("concurrence_branch: c0 must lie in [0, 1]");
    if (n < 1)
        throw std::invalid_argument("concurrence_branch: n must be >= 1");
    const double c2n = cos_pow_2n(g, tau, n);
    const double c4n = c2n * c2n;
    const double s = std::sqrt(1.0 - c0 * c0);
    const double sign = branch == Branch::Plus ? -1.0 : 1.0;
    const double den = 1.0 + c4n + sign * s * (1.0 - c4n);
    return 2.0 * c0 * c2n / den;
}

double free_concurrence(double c0, double t, double g, Branch branch) {
    if (c0 < 0.0 || c0 > 1.0)
        throw std::invalid_argument("free_concurrence: c0 must lie in [0, 1]");
    if (t < 0.0)
        throw std::invalid_argument("free_concurrence: t must be >= 0");
    const double s = std::sqrt(1.0 - c0 * c0);
    const double sign = branch == Branch::Plus ? 1.0 : -1.0;
    const double cos2 = std::cos(g * t) * std::cos(g * t);
    const double sin2 = std::sin(g * t) * std::sin(g * t);
    const double lambda = std::sqrt(1.0 + sign * s) * cos2 *
                          (std::sqrt(1.0 - sign * s) -
                           std::sqrt(1.0 + sign * s) * sin2);
    return clamp01(std::max(0.0, lambda));
}

std::optional<double> sudden_death_time(double c0, double g) {
    if (!(c0 > 0.0) || c0 > 1.0)
        throw std::invalid_argument("sudden_death_time: c0 must lie in (0, 1]");
    if (c0 == 1.0) return std::nullopt;  // concurrence only dies at the swap
    const double s = std::sqrt(1.0 - c0 * c0);
    const double ratio =
        std::pow(1.0 - s, 0.25) / std::pow(1.0 + s, 0.25);
    return std::asin(ratio) / g;
}

double bell_prep_time(const SystemParams& params) {
    const double am = std::abs(params.alpha0);
    const double bm = std::abs(params.beta0);
    if (!(am > bm))
        throw std::invalid_argument(
            "bell_prep_time: requires |alpha0| > |beta0|");
    if (!(bm > 0.0))
        throw std::invalid_argument("bell_prep_time: requires |beta0| > 0");
    return std::acos(std::sqrt(bm / am)) / params.g;
}

}  // namespace qzeno
