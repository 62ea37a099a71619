// Command-line surface for the triplet quantum-dot calculations: reproduce
// the property table, dump radial/pair/density-matrix grids, run the force
// balance and the self-consistency verification.
//
// Exit codes: 0 pass, 1 check or usage failure, 2 I/O failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdot/consistency.hpp"
#include "qdot/energies.hpp"
#include "qdot/io.hpp"
#include "qdot/selfcheck.hpp"
#include "qdot/sources.hpp"

namespace {

struct RunConfig {
    std::string command;
    std::string quantity = "rho";
    double omega_l = 0.1;
    double r_max = 10.0;
    int samples = 200;
    double reference_r = 0.0;
    double theta = 0.0;          // degrees
    double theta_prime = 0.0;    // degrees
    std::string output_path = "-";
    std::string format = "csv";
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    bool emit_gnuplot = false;
};

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitIoFailure = 2;

class OutputFile {
public:
    explicit OutputFile(const std::string& path) : path_(path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw std::ios_base::failure("cannot open output path: " + path);
        }
    }
    std::ostream& stream() { return path_ == "-" ? std::cout : file_; }
    void finish() {
        stream().flush();
        if (!stream()) throw std::ios_base::failure("write failed: " + path_);
    }

private:
    std::string path_;
    std::ofstream file_;
};

void maybe_emit_gnuplot(const RunConfig& cfg, const std::string& ylabel) {
    if (!cfg.emit_gnuplot || cfg.output_path == "-") return;
    std::ofstream gp(cfg.output_path + ".gp");
    gp << "set datafile separator ','\n"
       << "set xlabel 'r (a.u.)'\n"
       << "set ylabel '" << ylabel << "'\n"
       << "plot '" << cfg.output_path << "' skip 1 using 1:2 with lines title '" << ylabel
       << "'\n";
}

int cmd_table1(const RunConfig& cfg, const qdot::TripletParams& params, const qdot::QuadSpec& spec) {
    const qdot::EnergyReport closed = qdot::energy_report(params, spec);
    const qdot::EnergyReport quad = qdot::energy_report_quadrature(params, spec);
    OutputFile out(cfg.output_path);
    if (cfg.format == "json") {
        out.stream() << qdot::energy_report_json(closed, quad);
    } else {
        qdot::write_energy_report_csv(out.stream(), closed, quad);
    }
    out.finish();
    return kExitOk;
}

int cmd_profile(const RunConfig& cfg, const qdot::TripletParams& params, const qdot::QuadSpec& spec) {
    if (!qdot::is_profile_quantity(cfg.quantity)) {
        std::cerr << "unknown quantity '" << cfg.quantity << "'; valid names:";
        for (const auto& q : qdot::profile_quantities()) std::cerr << ' ' << q;
        std::cerr << '\n';
        return kExitCheckFailure;
    }
    const qdot::RadialProfile profile =
        qdot::make_profile(cfg.quantity, params, spec, cfg.r_max, cfg.samples);
    OutputFile out(cfg.output_path);
    qdot::write_profile_csv(out.stream(), profile);
    out.finish();
    maybe_emit_gnuplot(cfg, cfg.quantity);
    return kExitOk;
}

int cmd_pair(const RunConfig& cfg, const qdot::TripletParams& params, const qdot::QuadSpec&) {
    if (cfg.reference_r < 0.0) {
        std::cerr << "reference_r must be >= 0\n";
        return kExitCheckFailure;
    }
    const bool to_stdout = cfg.output_path == "-";
    const auto write = [&](qdot::PairQuantity what, const std::string& suffix) {
        const qdot::PairGrid grid = qdot::pair_grid(what, cfg.reference_r, params);
        const std::string path = to_stdout ? "-" : cfg.output_path + suffix;
        OutputFile out(path);
        if (to_stdout) out.stream() << "# " << (suffix.empty() ? "g" : suffix) << '\n';
        qdot::write_pair_grid_csv(out.stream(), grid);
        out.finish();
    };
    write(qdot::PairQuantity::pair_correlation, to_stdout ? "" : ".g.csv");
    write(qdot::PairQuantity::xc_hole, to_stdout ? "" : ".xc.csv");
    return kExitOk;
}

int cmd_dm(const RunConfig& cfg, const qdot::TripletParams& params, const qdot::QuadSpec& spec) {
    const double deg = M_PI / 180.0;
    const int n = std::min(cfg.samples, 96);
    const qdot::DensityMatrixGrid grid = qdot::density_matrix_grid(
        cfg.theta * deg, cfg.theta_prime * deg, cfg.r_max, n, params, spec);
    OutputFile out(cfg.output_path);
    qdot::write_density_matrix_csv(out.stream(), grid);
    out.finish();
    return kExitOk;
}

int cmd_law(const RunConfig& cfg, const qdot::TripletParams& params, const qdot::QuadSpec&) {
    std::vector<double> grid;
    const double lo = 0.1;
    const double hi = std::max(lo + 1e-6, cfg.r_max);
    for (int i = 0; i < cfg.samples; ++i) grid.push_back(lo + (hi - lo) * i / (cfg.samples - 1));
    const qdot::LawReport report = qdot::law_report(grid, params);
    OutputFile out(cfg.output_path);
    if (cfg.format == "json") {
        out.stream() << qdot::law_report_json(report);
    } else {
        qdot::write_law_report_csv(out.stream(), report);
    }
    out.finish();
    std::cerr << "max |residual| = " << qdot::format_value(report.max_abs_residual) << '\n';
    return report.max_abs_residual <= 1e-4 ? kExitOk : kExitCheckFailure;
}

int cmd_selfcheck(const RunConfig& cfg, const qdot::TripletParams& params, const qdot::QuadSpec& spec) {
    const std::vector<qdot::CheckResult> checks = qdot::run_invariant_suite(params, spec);
    const qdot::SelfConsistencyReport sc = qdot::self_consistency_check(params, spec);
    OutputFile out(cfg.output_path);
    bool all_pass = true;
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        out.stream() << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    }
    out.stream() << qdot::self_consistency_json(sc);
    out.finish();
    if (!all_pass) {
        for (const auto& c : checks) {
            if (!c.pass) {
                std::cerr << "first failing invariant: " << c.name << '\n';
                break;
            }
        }
    }
    return (all_pass && sc.pass) ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Quantal sources, fields and energies of a two-electron 2-D quantum dot in a magnetic field"};
    app.add_option("--command", cfg.command, "one of: table1 profile pair dm law selfcheck")
        ->required();
    app.add_option("--quantity", cfg.quantity, "radial quantity for --command profile");
    app.add_option("--omega-l", cfg.omega_l, "Larmor frequency (a.u.), default 0.1");
    app.add_option("--r-max", cfg.r_max, "radial grid extent");
    app.add_option("--samples", cfg.samples, "sample count");
    app.add_option("--reference-r", cfg.reference_r, "electron position on the x-axis (pair command)");
    app.add_option("--theta", cfg.theta, "first angle in degrees (dm command)");
    app.add_option("--theta-prime", cfg.theta_prime, "second angle in degrees (dm command)");
    app.add_option("--out", cfg.output_path, "output path, '-' for stdout");
    app.add_option("--format", cfg.format, "csv or json");
    app.add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    app.add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
    app.add_flag("--emit-gnuplot", cfg.emit_gnuplot, "write a companion gnuplot script");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitCheckFailure;
    }

    if (cfg.samples < 2 || !(cfg.r_max > 0.0) || cfg.omega_l < 0.0) {
        std::cerr << "usage error: need samples >= 2, r_max > 0, omega_l >= 0\n";
        return kExitCheckFailure;
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        std::cerr << "usage error: --format must be csv or json\n";
        return kExitCheckFailure;
    }

    qdot::TripletParams params = qdot::TripletParams::paper(cfg.omega_l);
    qdot::QuadSpec spec = qdot::QuadSpec::for_gaussian_scale(params.omega);
    spec.rel_tol = cfg.rel_tol;
    spec.abs_tol = cfg.abs_tol;

    try {
        if (cfg.command == "table1") return cmd_table1(cfg, params, spec);
        if (cfg.command == "profile") return cmd_profile(cfg, params, spec);
        if (cfg.command == "pair") return cmd_pair(cfg, params, spec);
        if (cfg.command == "dm") return cmd_dm(cfg, params, spec);
        if (cfg.command == "law") return cmd_law(cfg, params, spec);
        if (cfg.command == "selfcheck") return cmd_selfcheck(cfg, params, spec);
        std::cerr << "unknown command '" << cfg.command
                  << "'; valid: table1 profile pair dm law selfcheck\n";
        return kExitCheckFailure;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O failure: " << e.what() << '\n';
        return kExitIoFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
}
