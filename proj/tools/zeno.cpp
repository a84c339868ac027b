// Command-line driver for the double Jaynes-Cummings Zeno experiments.
// Emits deterministic CSV suitable for regression diffs and plotting.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qzeno/sweep.hpp"
#include "qzeno/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct CommonOpts {
    std::vector<double> c0;
    double alpha0 = -1.0;
    double beta0 = -1.0;
    std::string branch = "plus";
    long n_max = 100;
    int time_points = 201;
    double g = 1.0;
    std::string out = "-";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--c0", opts.c0,
                    "Initial concurrence value(s) in (0, 1]");
    cmd->add_option("--alpha0", opts.alpha0, "|alpha0| of the initial state");
    cmd->add_option("--beta0", opts.beta0, "|beta0| of the initial state");
    cmd->add_option("--branch", opts.branch, "Amplitude branch")
        ->check(CLI::IsMember({"plus", "minus"}));
    cmd->add_option("--n-max", opts.n_max, "Largest measurement count");
    cmd->add_option("--time-points", opts.time_points,
                    "Number of gt samples on [0, pi/2]");
    cmd->add_option("--g", opts.g, "Coupling rate");
    cmd->add_option("--out", opts.out, "Output path; '-' for stdout");
}

qzeno::Branch parse_branch(const std::string& name) {
    return name == "minus" ? qzeno::Branch::Minus : qzeno::Branch::Plus;
}

// The initial state comes either from --c0/--branch or from explicit
// amplitudes; mixing the two is ambiguous and rejected.
std::vector<double> resolve_c0_grid(const CommonOpts& opts,
                                    const std::vector<double>& fallback) {
    const bool has_amp = opts.alpha0 >= 0.0 || opts.beta0 >= 0.0;
    if (has_amp && !opts.c0.empty())
        throw CLI::ValidationError(
            "supply either --c0 or --alpha0/--beta0, not both");
    if (has_amp) {
        if (opts.alpha0 < 0.0 || opts.beta0 < 0.0)
            throw CLI::ValidationError("--alpha0 and --beta0 go together");
        const qzeno::SystemParams p(opts.alpha0, opts.beta0, opts.g);
        return {2.0 * std::abs(p.alpha0) * std::abs(p.beta0)};
    }
    return opts.c0.empty() ? fallback : opts.c0;
}

qzeno::SystemParams resolve_params(const CommonOpts& opts) {
    const bool has_amp = opts.alpha0 >= 0.0 || opts.beta0 >= 0.0;
    if (has_amp && !opts.c0.empty())
        throw CLI::ValidationError(
            "supply either --c0 or --alpha0/--beta0, not both");
    if (has_amp) return {opts.alpha0, opts.beta0, opts.g};
    if (opts.c0.size() != 1)
        throw CLI::ValidationError("expected exactly one --c0 value");
    const double a = qzeno::alpha_from_c0(opts.c0.front(),
                                          parse_branch(opts.branch));
    return {a, std::sqrt(std::max(0.0, 1.0 - a * a)), opts.g};
}

int write_output(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    file << payload;
    if (!file) {
        std::cerr << "error: write to '" << path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

const std::vector<double> kDefaultC0Grid = {0.1, 0.2, 0.3, 0.4, 0.5,
                                            0.6, 0.7, 0.8, 0.9};

int run_validate() {
    bool ok = true;
    for (const auto& check : qzeno::run_all_checks()) {
        std::printf("%-32s max_dev=%.3e tol=%.0e  %s\n", check.name.c_str(),
                    check.max_deviation, check.tolerance,
                    check.passed ? "PASS" : "FAIL");
        ok = ok && check.passed;
    }
    return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeno-like measurement experiments on the double "
                 "Jaynes-Cummings four-qubit system"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* zeno_sweep = app.add_subcommand(
        "zeno-sweep", "Concurrence after N null measurements vs N");
    auto* free_evo = app.add_subcommand(
        "free-evolution", "Free concurrence over (gt, c0), with oracle column");
    auto* single = app.add_subcommand(
        "single-measurement", "Concurrence after one measurement at time t");
    auto* bell = app.add_subcommand(
        "bell-prep", "Single-measurement Bell-state preparation report");
    auto* validate = app.add_subcommand(
        "validate", "Run the full oracle-vs-analytic check suite");
    for (auto* cmd : {zeno_sweep, free_evo, single, bell})
        add_common(cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return run_validate();

        qzeno::SweepSpec spec;
        spec.branch = parse_branch(opts.branch);
        spec.n_max = opts.n_max;
        spec.time_points = opts.time_points;
        spec.g = opts.g;
        spec.output_path = opts.out;

        std::ostringstream buffer;
        if (zeno_sweep->parsed()) {
            spec.experiment = qzeno::Experiment::ZenoSweep;
            spec.c0_grid = resolve_c0_grid(opts, {0.8});
            qzeno::run_zeno_sweep(spec, buffer);
        } else if (free_evo->parsed()) {
            spec.experiment = qzeno::Experiment::FreeEvolution;
            spec.c0_grid = resolve_c0_grid(opts, kDefaultC0Grid);
            qzeno::run_free_evolution(spec, buffer);
        } else if (single->parsed()) {
            spec.experiment = qzeno::Experiment::SingleMeasurement;
            spec.c0_grid = resolve_c0_grid(opts, kDefaultC0Grid);
            qzeno::run_single_measurement(spec, buffer);
        } else if (bell->parsed()) {
            const auto report = qzeno::run_bell_prep(resolve_params(opts));
            qzeno::write_bell_prep(report, buffer);
        }
        return write_output(opts.out, buffer.str());
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
