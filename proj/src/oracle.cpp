#include "qzeno/oracle.hpp"

#include "qzeno/concurrence.hpp"

namespace qzeno {

namespace {

constexpr double kImpossibleOutcome = 1e-15;

int bit(int index, int position) { return (index >> position) & 1; }

Eigen::Matrix<Complex, 16, 1> to_vector(const PureState16& s) {
    Eigen::Matrix<Complex, 16, 1> v;
    for (int i = 0; i < 16; ++i) v(i) = s.amp[i];
    return v;
}

PureState16 from_vector(const Eigen::Matrix<Complex, 16, 1>& v) {
    PureState16 s;
    for (int i = 0; i < 16; ++i) s.amp[i] = v(i);
    return s;
}

}  // namespace

Hamiltonian16 build_hamiltonian(double g) {
    if (!(g > 0.0))
        throw std::invalid_argument("build_hamiltonian: g must be positive");
    Hamiltonian16 h;
    // Bit positions in basis_index: a=3, b=2, A=1, B=0.
    const std::pair<int, int> pairs[] = {{3, 1}, {2, 0}};  // a<->A, b<->B
    for (int i = 0; i < 16; ++i) {
        for (auto [hi, lo] : pairs) {
            if (bit(i, hi) == 1 && bit(i, lo) == 0) {
                const int j = (i & ~(1 << hi)) | (1 << lo);
                h.m(i, j) = g;
                h.m(j, i) = g;
            }
        }
    }
    return h;
}

PureState16 evolve(const PureState16& state, const Hamiltonian16& h,
                   double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, 16, 16>> es(h.m);
    Eigen::Matrix<Complex, 16, 1> phases;
    for (int i = 0; i < 16; ++i)
        phases(i) = std::exp(Complex(0.0, -es.eigenvalues()(i) * t));
    const Eigen::Matrix<Complex, 16, 1> modal =
        es.eigenvectors().adjoint() * to_vector(state);
    const Eigen::Matrix<Complex, 16, 1> v =
        es.eigenvectors() * phases.cwiseProduct(modal);
    return from_vector(v);
}

PureState16 evolve_rk4(const PureState16& state, const Hamiltonian16& h,
                       double t, double dt) {
    if (!(dt > 0.0))
        throw std::invalid_argument("evolve_rk4: dt must be positive");
    const Complex minus_i(0.0, -1.0);
    auto rhs = [&](const Eigen::Matrix<Complex, 16, 1>& v) {
        return (minus_i * (h.m * v)).eval();
    };
    Eigen::Matrix<Complex, 16, 1> v = to_vector(state);
    const long steps = static_cast<long>(std::ceil(t / dt));
    for (long s = 0; s < steps; ++s) {
        const double step = std::min(dt, t - static_cast<double>(s) * dt);
        const auto k1 = rhs(v);
        const auto k2 = rhs(v + 0.5 * step * k1);
        const auto k3 = rhs(v + 0.5 * step * k2);
        const auto k4 = rhs(v + step * k3);
        v += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return from_vector(v);
}

NullProjection project_null_ab(const PureState16& state) {
    NullProjection out;
    out.probability = 0.0;
    for (int i = 0; i < 16; ++i) {
        if ((i & 0b0011) == 0) {  // n_A = n_B = 0
            out.state.amp[i] = state.amp[i];
            out.probability += std::norm(state.amp[i]);
        }
    }
    if (out.probability < kImpossibleOutcome)
        throw std::runtime_error(
            "project_null_ab: impossible outcome (null probability ~ 0)");
    const double inv_norm = 1.0 / std::sqrt(out.probability);
    for (auto& a : out.state.amp) a *= inv_norm;
    return out;
}

PureState16 initial_state(const SystemParams& params) {
    PureState16 s;
    s.amp[basis_index(1, 1, 0, 0)] = params.alpha0;
    s.amp[basis_index(0, 0, 0, 0)] = params.beta0;
    return s;
}

TwoQubitPure extract_ab(const PureState16& state) {
    TwoQubitPure ab;
    double residual = 0.0;
    for (int i = 0; i < 16; ++i) {
        if ((i & 0b0011) == 0)
            ab.amp[i >> 2] = state.amp[i];
        else
            residual += std::norm(state.amp[i]);
    }
    if (residual > kExactTol)
        throw std::invalid_argument(
            "extract_ab: state has support outside n_A = n_B = 0");
    return ab;
}

ZenoOutcome run_zeno_protocol(const SystemParams& params, long n,
                              double total_time) {
    if (n < 1)
        throw std::invalid_argument("run_zeno_protocol: n must be >= 1");
    const double tau = total_time / static_cast<double>(n);
    const Hamiltonian16 h = build_hamiltonian(params.g);

    PureState16 psi = initial_state(params);
    double survival = 1.0;
    for (long k = 0; k < n; ++k) {
        psi = evolve(psi, h, tau);
        const auto proj = project_null_ab(psi);
        psi = proj.state;
        survival *= proj.probability;
    }

    ZenoOutcome out;
    out.n_measurements = n;
    out.tau = tau;
    out.survival_probability = survival;
    out.ab_state = extract_ab(psi);
    out.concurrence = pure_concurrence(out.ab_state);
    return out;
}

TwoQubitDensity reduce_to_ab(const PureState16& state) {
    TwoQubitDensity rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)  // traced AB index
                rho.entries(i, j) += state.amp[(i << 2) | k] *
                                     std::conj(state.amp[(j << 2) | k]);
    return rho;
}

double total_excitation(const PureState16& state) {
    double n = 0.0;
    for (int i = 0; i < 16; ++i)
        n += std::norm(state.amp[i]) *
             (bit(i, 0) + bit(i, 1) + bit(i, 2) + bit(i, 3));
    return n;
}

}  // namespace qzeno
