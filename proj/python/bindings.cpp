#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qzeno/analytic.hpp"
#include "qzeno/concurrence.hpp"
#include "qzeno/oracle.hpp"
#include "qzeno/sweep.hpp"
#include "qzeno/validate.hpp"

namespace py = pybind11;
using namespace qzeno;

namespace {

std::vector<Complex> amps16(const PureState16& s) {
    return {s.amp.begin(), s.amp.end()};
}

PureState16 state16_from(const std::vector<Complex>& amps) {
    if (amps.size() != 16)
        throw std::invalid_argument("expected 16 amplitudes");
    PureState16 s;
    std::copy(amps.begin(), amps.end(), s.amp.begin());
    return s;
}

TwoQubitPure pure2_from(const std::vector<Complex>& amps) {
    if (amps.size() != 4) throw std::invalid_argument("expected 4 amplitudes");
    TwoQubitPure s;
    std::copy(amps.begin(), amps.end(), s.amp.begin());
    return s;
}

template <typename Runner>
std::string csv_of(const SweepSpec& spec, Runner runner) {
    std::ostringstream os;
    runner(spec, os);
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_qzeno, m) {
    m.doc() =
        "Zeno-like measurement dynamics on the double Jaynes-Cummings "
        "four-qubit system: closed forms, brute-force oracle, concurrence.";

    py::enum_<Branch>(m, "Branch")
        .value("PLUS", Branch::Plus)
        .value("MINUS", Branch::Minus);

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<Complex, Complex, double>(), py::arg("alpha0"),
             py::arg("beta0"), py::arg("g") = 1.0)
        .def_readonly("alpha0", &SystemParams::alpha0)
        .def_readonly("beta0", &SystemParams::beta0)
        .def_readonly("g", &SystemParams::g);

    py::class_<ZenoOutcome>(m, "ZenoOutcome")
        .def_property_readonly(
            "ab_state",
            [](const ZenoOutcome& z) {
                return std::vector<Complex>(z.ab_state.amp.begin(),
                                            z.ab_state.amp.end());
            })
        .def_readonly("survival_probability", &ZenoOutcome::survival_probability)
        .def_readonly("concurrence", &ZenoOutcome::concurrence)
        .def_readonly("n_measurements", &ZenoOutcome::n_measurements)
        .def_readonly("tau", &ZenoOutcome::tau);

    py::class_<BellPrepReport>(m, "BellPrepReport")
        .def_readonly("t_star", &BellPrepReport::t_star)
        .def_readonly("survival_probability",
                      &BellPrepReport::survival_probability)
        .def_readonly("final_concurrence", &BellPrepReport::final_concurrence);

    m.def("basis_index", &basis_index, py::arg("n_a"), py::arg("n_b"),
          py::arg("n_A"), py::arg("n_B"));
    m.def("swap_time", &swap_time, py::arg("g") = 1.0);

    // closed forms
    m.def(
        "evolved_state",
        [](const SystemParams& p, double t) { return amps16(evolved_state(p, t)); },
        py::arg("params"), py::arg("t"));
    m.def("zeno_state",
          py::overload_cast<const SystemParams&, long, double>(&zeno_state),
          py::arg("params"), py::arg("n"), py::arg("total_time"));
    m.def("zeno_state", py::overload_cast<const SystemParams&, long>(&zeno_state),
          py::arg("params"), py::arg("n"));
    m.def("concurrence_after_n", &concurrence_after_n, py::arg("params"),
          py::arg("n"), py::arg("tau"));
    m.def("alpha_from_c0", &alpha_from_c0, py::arg("c0"), py::arg("branch"));
    m.def("concurrence_branch", &concurrence_branch, py::arg("c0"), py::arg("n"),
          py::arg("tau"), py::arg("g"), py::arg("branch"));
    m.def("free_concurrence", &free_concurrence, py::arg("c0"), py::arg("t"),
          py::arg("g"), py::arg("branch"));
    m.def(
        "sudden_death_time",
        [](double c0, double g) -> py::object {
            const auto t = sudden_death_time(c0, g);
            return t ? py::cast(*t) : py::none();
        },
        py::arg("c0"), py::arg("g") = 1.0,
        "Sudden-death time on the plus branch; None when c0 = 1.");
    m.def("bell_prep_time", &bell_prep_time, py::arg("params"));

    // brute-force oracle
    m.def(
        "build_hamiltonian",
        [](double g) { return Eigen::MatrixXcd(build_hamiltonian(g).m); },
        py::arg("g") = 1.0);
    m.def(
        "evolve",
        [](const std::vector<Complex>& amps, double g, double t) {
            return amps16(evolve(state16_from(amps), build_hamiltonian(g), t));
        },
        py::arg("state"), py::arg("g"), py::arg("t"));
    m.def(
        "project_null_ab",
        [](const std::vector<Complex>& amps) {
            const auto proj = project_null_ab(state16_from(amps));
            return py::make_tuple(amps16(proj.state), proj.probability);
        },
        py::arg("state"));
    m.def(
        "initial_state",
        [](const SystemParams& p) { return amps16(initial_state(p)); },
        py::arg("params"));
    m.def("run_zeno_protocol", &run_zeno_protocol, py::arg("params"),
          py::arg("n"), py::arg("total_time"));
    m.def(
        "reduce_to_ab",
        [](const std::vector<Complex>& amps) {
            return Eigen::MatrixXcd(reduce_to_ab(state16_from(amps)).entries);
        },
        py::arg("state"));

    // concurrence
    m.def(
        "pure_concurrence",
        [](const std::vector<Complex>& amps) {
            return pure_concurrence(pure2_from(amps));
        },
        py::arg("state"));
    m.def(
        "wootters_concurrence",
        [](const Eigen::Matrix4cd& rho) {
            TwoQubitDensity d;
            d.entries = rho;
            return wootters_concurrence(d);
        },
        py::arg("rho"));

    // experiments
    m.def(
        "zeno_sweep_csv",
        [](double c0, long n_max, double g) {
            SweepSpec spec;
            spec.c0_grid = {c0};
            spec.n_max = n_max;
            spec.g = g;
            return csv_of(spec, run_zeno_sweep);
        },
        py::arg("c0"), py::arg("n_max") = 100, py::arg("g") = 1.0);
    m.def(
        "free_evolution_csv",
        [](std::vector<double> c0_grid, int time_points, double g) {
            SweepSpec spec;
            spec.c0_grid = std::move(c0_grid);
            spec.time_points = time_points;
            spec.g = g;
            return csv_of(spec, run_free_evolution);
        },
        py::arg("c0_grid"), py::arg("time_points") = 201, py::arg("g") = 1.0);
    m.def(
        "single_measurement_csv",
        [](std::vector<double> c0_grid, int time_points, double g) {
            SweepSpec spec;
            spec.c0_grid = std::move(c0_grid);
            spec.time_points = time_points;
            spec.g = g;
            return csv_of(spec, run_single_measurement);
        },
        py::arg("c0_grid"), py::arg("time_points") = 201, py::arg("g") = 1.0);
    m.def("run_bell_prep", &run_bell_prep, py::arg("params"));
    m.def("validate", []() {
        py::list out;
        for (const auto& check : run_all_checks()) {
            py::dict d;
            d["name"] = check.name;
            d["max_deviation"] = check.max_deviation;
            d["tolerance"] = check.tolerance;
            d["passed"] = check.passed;
            out.append(d);
        }
        return out;
    });
}
