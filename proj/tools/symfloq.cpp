// symfloq command-line front end: simulate | sweep-grid | sweep-j | validate.
// Exit codes: 0 ok, 1 validation failure, 2 invalid flags, 3 numeric failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symfloq/errors.hpp"
#include "symfloq/harness/config.hpp"
#include "symfloq/harness/output.hpp"
#include "symfloq/harness/sweep.hpp"
#include "symfloq/harness/validate.hpp"

using namespace symfloq;

namespace {

struct Common {
    double tau = pi / 4;
    std::string out, format = "csv", backend = "symmetric", measures = "s_lin,s_vn,conc", averaging = "auto";
    long long steps = kDefaultWindow;
};

void add_common(CLI::App* c, Common& o, bool with_steps) {
    c->add_option("--tau", o.tau, "kick period")->capture_default_str();
    c->add_option("--out", o.out, "output file (stdout when omitted)");
    c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    c->add_option("--backend", o.backend, "symmetric or brute")
        ->check(CLI::IsMember({"symmetric", "brute"}))
        ->capture_default_str();
    if (with_steps) {
        c->add_option("--steps", o.steps, "long-window length when no period is found")->capture_default_str();
        c->add_option("--measures", o.measures, "comma list of s_lin, s_vn, conc")->capture_default_str();
        c->add_option("--averaging", o.averaging, "auto or window")
            ->check(CLI::IsMember({"auto", "window"}))
            ->capture_default_str();
    }
}

Measures parse_measures(const std::string& s) {
    Measures m{false, false, false};
    std::stringstream ss(s);
    for (std::string t; std::getline(ss, t, ',');) {
        if (t == "s_lin") m.s_lin = true;
        else if (t == "s_vn") m.s_vn = true;
        else if (t == "conc") m.conc = true;
        else throw std::invalid_argument("unknown measure '" + t + "'");
    }
    return m;
}

RunOptions run_options(const Common& c) {
    RunOptions o;
    o.tau = c.tau;
    if (c.steps < 1) throw std::invalid_argument("--steps must be >= 1 for sweeps");
    o.window = c.steps;
    o.measures = parse_measures(c.measures);
    o.backend = c.backend == "brute" ? Backend::Brute : Backend::Symmetric;
    o.window_only = c.averaging == "window";
    return o;
}

// Data goes to --out or stdout; the human summary goes to stdout only when
// data is in a file, so piped CSV stays clean.
struct Sink {
    std::ofstream file;
    std::ostream* data = &std::cout;
    std::ostream* info = &std::cerr;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        data = &file;
        info = &std::cout;
    }
};

void print_rows(Sink& sink, const Common& c, const std::vector<SweepResultRow>& rows) {
    if (c.format == "json")
        write_json(*sink.data, sweep_json(rows));
    else
        write_sweep_csv(*sink.data, rows);
}

std::string state_str(double th, double ph) { return "|" + fmt17(th) + ", " + fmt17(ph) + ">"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry-reduced kicked-Ising Floquet simulator"};
    app.require_subcommand(1);
    std::string config;
    app.add_option("--config", config, "key=value file; explicit flags take precedence");

    // simulate
    Common sim;
    int sim_n = 4;
    double sim_j = 1, sim_theta = 0, sim_phi = 0;
    long long sim_steps = 16;
    auto* s = app.add_subcommand("simulate", "single trajectory");
    s->add_option("--n-qubits", sim_n)->required();
    s->add_option("--j", sim_j)->required();
    s->add_option("--theta0", sim_theta)->required();
    s->add_option("--phi0", sim_phi)->required();
    s->add_option("--steps", sim_steps)->capture_default_str();
    add_common(s, sim, false);
    s->add_option("--config", config);

    // sweep-grid
    Common grid;
    std::vector<int> grid_n{4};
    std::vector<double> grid_j{1.0};
    int gt = 101, gp = 101;
    auto* g = app.add_subcommand("sweep-grid", "averages over a (theta0, phi0) grid");
    g->add_option("--n-qubits", grid_n)->delimiter(',')->capture_default_str();
    g->add_option("--j", grid_j)->delimiter(',')->capture_default_str();
    g->add_option("--grid-theta", gt)->capture_default_str();
    g->add_option("--grid-phi", gp)->capture_default_str();
    add_common(g, grid, true);
    g->add_option("--config", config);

    // sweep-j
    Common js;
    std::vector<int> js_n{12};
    std::vector<double> js_theta{0.0}, js_phi{0.0};
    double j_min = 0.1, j_max = 1.5, j_step = 0.05;
    auto* j = app.add_subcommand("sweep-j", "normalized average entropy against J");
    j->add_option("--n-qubits", js_n)->delimiter(',')->capture_default_str();
    j->add_option("--j-min", j_min)->capture_default_str();
    j->add_option("--j-max", j_max)->capture_default_str();
    j->add_option("--j-step", j_step)->capture_default_str();
    j->add_option("--theta0", js_theta, "comma list, paired with --phi0")->delimiter(',')->capture_default_str();
    j->add_option("--phi0", js_phi)->delimiter(',')->capture_default_str();
    add_common(j, js, true);
    j->add_option("--config", config);

    // validate
    std::string suite = "all", vformat = "json", vout;
    unsigned long long seed = 7;
    auto* v = app.add_subcommand("validate", "golden, oracle and formula checks");
    v->add_option("--suite", suite)->check(CLI::IsMember({"golden", "oracle", "formulas", "all"}))->capture_default_str();
    v->add_option("--seed", seed)->capture_default_str();
    v->add_option("--out", vout);
    v->add_option("--format", vformat)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    v->add_option("--config", config);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = inject_config(args);
        std::reverse(args.begin(), args.end());  // CLI11 consumes the vector from the back
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*s) {
            if (sim_steps < 0) throw std::invalid_argument("--steps must be >= 0");
            const CoherentParams p{sim_n, sim_theta, sim_phi};
            const FloquetParams f{sim_n, sim_j, sim.tau};
            EntanglementSeries es = entanglement_series(p, f, sim_steps);
            if (sim.backend == "brute") es.steps = brute_series(p, f, sim_steps);
            Sink sink(sim.out);
            if (sim.format == "json")
                write_json(*sink.data, series_json(es.steps));
            else
                write_series_csv(*sink.data, es.steps);
            const auto P = series_period(es);
            const auto a = P ? average_first(es, *P, AverageMode::ExactPeriod)
                             : average_first(es, static_cast<long long>(es.steps.size()), AverageMode::LongWindow);
            auto& o = *sink.info;
            o << "operator_period: " << (es.operator_period ? std::to_string(*es.operator_period) : "none") << '\n'
              << "series_period: " << (P ? std::to_string(*P) : "none") << '\n'
              << "averaged_over: " << a.count << (P ? " steps (one period)" : " steps (whole series)") << '\n'
              << "avg_s_lin: " << fmt17(a.s_lin) << "\navg_s_vn: " << fmt17(a.s_vn) << "\navg_conc: " << fmt17(a.conc)
              << '\n';
            return 0;
        }
        if (*g) {
            GridSpec spec{grid_n, grid_j, gt, gp, run_options(grid)};
            const auto rows = run_grid(spec);
            Sink sink(grid.out);
            print_rows(sink, grid, rows);
            auto& o = *sink.info;
            auto line = [&](const char* what, const Extremum& x) {
                if (std::isnan(x.value)) return;  // measure switched off
                o << "  " << what << ' ' << fmt17(x.value) << " at " << state_str(x.theta0, x.phi0) << '\n';
            };
            for (const auto& e : grid_extrema(rows)) {
                o << "N=" << e.n << " J=" << fmt17(e.j) << '\n';
                line("avg_s_lin min", e.s_lin_min);
                line("avg_s_lin max", e.s_lin_max);
                line("avg_conc  min", e.conc_min);
                line("avg_conc  max", e.conc_max);
            }
            return 0;
        }
        if (*j) {
            if (js_theta.size() != js_phi.size())
                throw std::invalid_argument("--theta0 and --phi0 need the same number of values");
            JSweepSpec spec{js_n, j_range(j_min, j_max, j_step), {}, run_options(js)};
            for (size_t i = 0; i < js_theta.size(); ++i) {
                CoherentParams{2, js_theta[i], js_phi[i]}.validate();
                spec.states.emplace_back(js_theta[i], js_phi[i]);
            }
            const auto rows = run_j_sweep(spec);
            Sink sink(js.out);
            print_rows(sink, js, rows);
            for (const auto& d : dip_report(rows))
                *sink.info << "N=" << d.n << ' ' << state_str(d.theta0, d.phi0) << " J=" << fmt17(d.j)
                           << " ratio=" << fmt17(d.ratio) << " baseline=" << fmt17(d.baseline)
                           << (d.dip ? " dip" : " no dip") << '\n';
            return 0;
        }
        if (*v) {
            const auto checks = run_suite(suite, seed);
            Sink sink(vout);
            bool ok = true;
            for (const auto& c : checks) ok = ok && c.pass;
            if (vformat == "json") {
                write_json(*sink.data, checks_json(checks));
            } else {
                for (const auto& c : checks)
                    *sink.data << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name << "  value=" << c.value
                               << " tol=" << c.tol << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
            }
            *sink.info << (ok ? "all checks passed" : "some checks failed") << " (" << checks.size() << ")\n";
            return ok ? 0 : 1;
        }
    } catch (const numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const period_error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
