// Batch CLI for MAX-CUT experiments: brute force, QAOA, RQAOA, closed-form
// verification sweeps. All file output is deterministic for a given command
// line; timings go to stderr.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qaoa/analytic.hpp"
#include "qaoa/ising.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/parallel.hpp"
#include "qaoa/rqaoa.hpp"
#include "qaoa/statevector.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string{};
}

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

void report_time(const Timer& timer) {
    std::cerr << "wall_time_s " << fmt(timer.seconds()) << "\n";
}

qaoa::IsingModel load_model(const std::string& graph_file, int complete_m) {
    if (!graph_file.empty()) {
        std::ifstream in(graph_file);
        if (!in) throw qaoa::ParseError("cannot open file " + graph_file);
        std::ostringstream text;
        text << in.rdbuf();
        return qaoa::parse_edge_list(text.str());
    }
    return qaoa::complete_model(complete_m);
}

// Known optimum: brute force within the cap, the balanced-cut count
// floor(m^2/4) for complete graphs beyond it.
std::optional<double> known_optimum(const qaoa::IsingModel& model,
                                    bool is_complete) {
    if (model.num_vertices() <= qaoa::kDefaultBruteForceCap)
        return qaoa::brute_force_max(model).second;
    if (is_complete) {
        const long m = model.num_vertices();
        return static_cast<double>(m * m / 4);
    }
    return std::nullopt;
}

std::string assignment_line(const qaoa::SpinAssignment& x) {
    std::string out = "assignment";
    for (const auto& [v, s] : x)
        out += " " + std::to_string(v) + "=" + (s > 0 ? "+1" : "-1");
    return out;
}

struct ExperimentRow {
    double n = 0.0;
    int vertices = 0;
    std::string algorithm;
    int level = 0;
    double value = 0.0;
    std::optional<double> optimum;
    std::optional<double> ratio;
    double bound = 0.0;
    std::optional<bool> bound_satisfied;
};

ExperimentRow make_row(const std::string& algorithm, int level,
                       const qaoa::IsingModel& model, double value,
                       const std::optional<double>& optimum) {
    ExperimentRow row;
    row.vertices = model.num_vertices();
    row.n = row.vertices / 2.0;
    row.algorithm = algorithm;
    row.level = level;
    row.value = value;
    row.optimum = optimum;
    if (optimum && *optimum != 0.0) row.ratio = value / *optimum;
    row.bound = 1.0 - 1.0 / (8.0 * row.n * row.n);
    if (row.ratio) row.bound_satisfied = *row.ratio < row.bound;
    return row;
}

void print_row(const ExperimentRow& row) {
    std::cout << "algorithm " << row.algorithm << "\n"
              << "vertices " << row.vertices << "\n"
              << "n " << fmt(row.n) << "\n"
              << "level " << row.level << "\n"
              << "value " << fmt(row.value) << "\n";
    if (row.optimum) std::cout << "optimum " << fmt(*row.optimum) << "\n";
    if (row.ratio) std::cout << "ratio " << fmt(*row.ratio) << "\n";
    std::cout << "bound_1_minus_1_over_8n2 " << fmt(row.bound) << "\n";
    if (row.bound_satisfied)
        std::cout << "bound_satisfied " << (*row.bound_satisfied ? 1 : 0)
                  << "\n";
}

void write_row_csv(const std::string& path, const ExperimentRow& row) {
    std::ofstream out(path);
    if (!out) throw qaoa::Error("cannot write " + path);
    out << "n,vertices,algorithm,level,value,optimum,ratio,"
           "bound_1_minus_1_over_8n2,bound_satisfied\n";
    out << fmt(row.n) << ',' << row.vertices << ',' << row.algorithm << ','
        << row.level << ',' << fmt(row.value) << ',' << fmt_opt(row.optimum)
        << ',' << fmt_opt(row.ratio) << ',' << fmt(row.bound) << ',';
    if (row.bound_satisfied) out << (*row.bound_satisfied ? 1 : 0);
    out << "\n";
}

void print_traces(const std::vector<qaoa::RoundTrace>& traces) {
    for (const auto& t : traces) {
        std::cout << "round " << t.round << " eliminate " << t.eliminated
                  << " keep " << t.surviving << " M " << fmt(t.correlation)
                  << " sign " << (t.sign > 0 ? "+1" : "-1") << " active "
                  << t.active_before << "->" << t.active_after << " provider "
                  << t.provider << " F " << fmt(t.expectation) << "\n";
    }
}

// ---------------------------------------------------------------------------
// verify checks: one row per n, shared pass/fail table format.

struct CheckRow {
    std::string check;
    int n = 0;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

CheckRow check_rqaoa_exact(int n) {
    qaoa::RqaoaConfig config;
    config.threshold = 4;
    config.correlations = 2 * n <= 12 ? qaoa::CorrelationSource::statevector
                                      : qaoa::CorrelationSource::analytic;
    const qaoa::RqaoaSolution solution =
        qaoa::run_rqaoa(qaoa::complete_model(2 * n), config);
    const double expected = static_cast<double>(n) * n;
    const bool pass = std::abs(solution.value - expected) <= 1e-9 &&
                      std::llround(solution.value) == static_cast<long>(n) * n;
    return {"rqaoa-exact", n, solution.value, expected, pass};
}

CheckRow check_qaoa_bound(int n) {
    const double ratio = qaoa::qaoa1_ratio(n);
    if (n < 4) return {"qaoa-bound", n, ratio, 1.0, ratio < 1.0};
    const double bound = 1.0 - 1.0 / (8.0 * n * n);
    const double intermediate = 1.0 - 1.0 / (2.0 * n * (4.0 * n - 1.0));
    const bool pass =
        ratio < 1.0 && ratio < intermediate && intermediate < bound;
    return {"qaoa-bound", n, ratio, bound, pass};
}

CheckRow check_g_positivity(int n) {
    const qaoa::GPositivityReport report = qaoa::verify_g_positivity(n, 1e-4);
    const bool pass =
        report.positive && (n < 4 || report.all_critical_above_bound);
    return {"g-positivity", n, report.min_value, 0.0, pass};
}

CheckRow check_oracle_agreement(int n) {
    const qaoa::IsingModel model = qaoa::complete_model(2 * n);
    double max_dev = 0.0;
    for (int gi = 0; gi <= 20; ++gi) {
        for (int bi = 0; bi <= 20; ++bi) {
            const double gamma = gi * 2.0 * kPi / 20.0;
            const double beta = bi * kPi / 20.0;
            const qaoa::Statevector state =
                qaoa::qaoa_state(model, {1, {gamma}, {beta}});
            const double analytic = qaoa::expected_edge_cost(n, gamma, beta);
            for (const auto& [key, j] : model.couplings()) {
                const double simulated =
                    0.5 *
                    (1.0 - qaoa::correlation(state, key.first, key.second));
                max_dev = std::max(max_dev, std::abs(simulated - analytic));
            }
        }
    }
    return {"oracle-agreement", n, max_dev, 1e-9, max_dev <= 1e-9};
}

CheckRow check_beta_stationarity(int n) {
    std::mt19937_64 rng(1000 + n);
    std::uniform_real_distribution<double> gamma_dist(0.01, kPi / 2.0 - 0.01);
    double max_derivative = 0.0;
    double max_mismatch = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double gamma = gamma_dist(rng);
        const double beta = qaoa::optimal_beta(n, gamma);
        const double h = 1e-6;
        const double fd = (qaoa::edge_cost_gain(n, gamma, beta + h) -
                           qaoa::edge_cost_gain(n, gamma, beta - h)) /
                          (2.0 * h);
        max_derivative = std::max(max_derivative, std::abs(fd));
        max_mismatch = std::max(
            max_mismatch, std::abs(qaoa::f_reduced(n, gamma) -
                                   qaoa::edge_cost_gain(n, gamma, beta)));
    }
    const bool pass = max_derivative <= 1e-6 && max_mismatch <= 1e-12;
    return {"beta-stationarity", n, max_derivative, 1e-6, pass};
}

int run_verify(const std::string& check, int n_min, int n_max,
               const std::string& out_path) {
    std::vector<CheckRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        if (check == "rqaoa-exact") rows.push_back(check_rqaoa_exact(n));
        else if (check == "qaoa-bound") rows.push_back(check_qaoa_bound(n));
        else if (check == "g-positivity") rows.push_back(check_g_positivity(n));
        else if (check == "oracle-agreement")
            rows.push_back(check_oracle_agreement(n));
        else if (check == "beta-stationarity")
            rows.push_back(check_beta_stationarity(n));
    }

    bool all_pass = true;
    for (const auto& row : rows) {
        all_pass = all_pass && row.pass;
        std::cout << "check " << row.check << " n " << row.n << " value "
                  << fmt(row.value) << " threshold " << fmt(row.threshold)
                  << (row.pass ? " PASS" : " FAIL") << "\n";
    }
    std::cout << (all_pass ? "ALL PASS" : "FAILED") << " (" << rows.size()
              << " checks)\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw qaoa::Error("cannot write " + out_path);
        out << "check,n,value,threshold,pass\n";
        for (const auto& row : rows)
            out << row.check << ',' << row.n << ',' << fmt(row.value) << ','
                << fmt(row.threshold) << ',' << (row.pass ? 1 : 0) << "\n";
    }
    return all_pass ? 0 : 1;
}

int run_sweep(int n_min, int n_max, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw qaoa::Error("cannot write " + out_path);
    out << "n,vertices,qaoa1_ratio,rqaoa1_ratio,bound_1_minus_1_over_8n2\n";
    for (int n = n_min; n <= n_max; ++n) {
        const double qaoa_ratio = qaoa::qaoa1_ratio(n);
        qaoa::RqaoaConfig config;
        config.threshold = 4;
        const qaoa::RqaoaSolution solution =
            qaoa::run_rqaoa(qaoa::complete_model(2 * n), config);
        const double rqaoa_ratio =
            solution.value / (static_cast<double>(n) * n);
        const double bound = 1.0 - 1.0 / (8.0 * n * n);
        out << n << ',' << 2 * n << ',' << fmt(qaoa_ratio) << ','
            << fmt(rqaoa_ratio) << ',' << fmt(bound) << "\n";
        std::cout << "n " << n << " qaoa1_ratio " << fmt(qaoa_ratio)
                  << " rqaoa1_ratio " << fmt(rqaoa_ratio) << " bound "
                  << fmt(bound) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QAOA / RQAOA MAX-CUT experiments on weighted Ising models"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    int threads = 1;
    app.add_option("--threads", threads, "worker threads for simulator kernels")
        ->check(CLI::PositiveNumber);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "per-round RQAOA traces");

    std::string graph_file;
    int complete_m = 0;
    int level = 1;
    int grid = 64;
    int nc = 8;
    std::string correlations = "auto";
    std::string tie_break = "lexicographic";
    std::uint64_t seed = 0;
    std::string out_path;
    std::string check;
    int n_min = 2;
    int n_max = 10;

    auto add_model_options = [&](CLI::App* cmd) {
        auto* g = cmd->add_option("--graph", graph_file, "edge-list file");
        auto* c = cmd->add_option("--complete", complete_m,
                                  "complete graph on M vertices")
                      ->check(CLI::Range(2, 1 << 20));
        g->excludes(c);
        c->excludes(g);
    };

    auto* cmd_brute =
        app.add_subcommand("brute", "exact optimum by exhaustive search");
    add_model_options(cmd_brute);

    auto* cmd_qaoa = app.add_subcommand("qaoa", "level-p QAOA experiment");
    add_model_options(cmd_qaoa);
    cmd_qaoa->add_option("--level", level, "QAOA level p")
        ->check(CLI::PositiveNumber);
    cmd_qaoa->add_option("--grid", grid, "level-1 grid resolution per angle")
        ->check(CLI::Range(2, 4096));
    cmd_qaoa->add_option("--out", out_path, "write the result row as CSV");

    auto* cmd_rqaoa = app.add_subcommand("rqaoa", "recursive QAOA experiment");
    add_model_options(cmd_rqaoa);
    cmd_rqaoa->add_option("--level", level, "QAOA level p per round")
        ->check(CLI::PositiveNumber);
    cmd_rqaoa->add_option("--nc", nc, "stop threshold on active vertices")
        ->check(CLI::Range(2, 26));
    cmd_rqaoa
        ->add_option("--correlations", correlations,
                     "correlation provider: statevector|analytic|auto")
        ->check(CLI::IsMember({"statevector", "analytic", "auto"}));
    cmd_rqaoa
        ->add_option("--tie-break", tie_break,
                     "tie handling: lexicographic|random")
        ->check(CLI::IsMember({"lexicographic", "random"}));
    cmd_rqaoa->add_option("--seed", seed, "seed for random tie-breaks");
    cmd_rqaoa->add_option("--out", out_path, "write the result row as CSV");

    auto* cmd_verify =
        app.add_subcommand("verify", "pass/fail table for a named check");
    cmd_verify
        ->add_option("--check", check,
                     "rqaoa-exact|qaoa-bound|g-positivity|oracle-agreement|"
                     "beta-stationarity")
        ->required()
        ->check(CLI::IsMember({"rqaoa-exact", "qaoa-bound", "g-positivity",
                               "oracle-agreement", "beta-stationarity"}));
    cmd_verify->add_option("--n-min", n_min)->check(CLI::Range(2, 1000));
    cmd_verify->add_option("--n-max", n_max)->check(CLI::Range(2, 1000));
    cmd_verify->add_option("--out", out_path, "write the table as CSV");

    auto* cmd_sweep = app.add_subcommand(
        "sweep", "per-n CSV comparing QAOA and RQAOA ratios to the bound");
    cmd_sweep->add_option("--n-min", n_min)->check(CLI::Range(2, 1000));
    cmd_sweep->add_option("--n-max", n_max)->check(CLI::Range(2, 1000));
    cmd_sweep->add_option("--out", out_path, "output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    qaoa::set_max_threads(threads);
    Timer timer;

    try {
        if (app.got_subcommand(cmd_brute) || app.got_subcommand(cmd_qaoa) ||
            app.got_subcommand(cmd_rqaoa)) {
            if (graph_file.empty() && complete_m == 0) {
                std::cerr << "error: one of --graph or --complete is required\n";
                return 2;
            }
        }
        if (n_max < n_min) {
            std::cerr << "error: --n-max must be >= --n-min\n";
            return 2;
        }

        if (app.got_subcommand(cmd_brute)) {
            const qaoa::IsingModel model = load_model(graph_file, complete_m);
            const auto [assignment, value] = qaoa::brute_force_max(model);
            std::cout << "vertices " << model.num_vertices() << "\n"
                      << "optimum " << fmt(value) << "\n"
                      << assignment_line(assignment) << "\n";
            report_time(timer);
            return 0;
        }

        if (app.got_subcommand(cmd_qaoa)) {
            const qaoa::IsingModel model = load_model(graph_file, complete_m);
            qaoa::OptimizerConfig config;
            config.grid_gamma = grid;
            config.grid_beta = grid;
            const qaoa::OptimizationReport report =
                qaoa::optimize_schedule(model, level, config);
            const ExperimentRow row =
                make_row("qaoa", level, model, report.best_value,
                         known_optimum(model, complete_m > 0));
            print_row(row);
            std::cout << "evaluations " << report.evaluations << "\n"
                      << "strategy " << report.strategy << "\n";
            if (verbose) {
                std::cout << "gammas";
                for (double g : report.best_schedule.gammas)
                    std::cout << ' ' << fmt(g);
                std::cout << "\nbetas";
                for (double b : report.best_schedule.betas)
                    std::cout << ' ' << fmt(b);
                std::cout << "\n";
            }
            if (!out_path.empty()) write_row_csv(out_path, row);
            report_time(timer);
            return 0;
        }

        if (app.got_subcommand(cmd_rqaoa)) {
            const qaoa::IsingModel model = load_model(graph_file, complete_m);
            qaoa::RqaoaConfig config;
            config.level = level;
            config.threshold = nc;
            config.seed = seed;
            if (correlations == "statevector")
                config.correlations = qaoa::CorrelationSource::statevector;
            else if (correlations == "analytic")
                config.correlations = qaoa::CorrelationSource::analytic;
            if (tie_break == "random")
                config.tie_break = qaoa::TieBreak::seeded_random;

            const qaoa::RqaoaSolution solution = qaoa::run_rqaoa(model, config);
            std::optional<double> optimum = solution.optimum;
            if (!optimum) optimum = known_optimum(model, complete_m > 0);
            const ExperimentRow row =
                make_row("rqaoa", level, model, solution.value, optimum);
            print_row(row);
            std::cout << "rounds " << solution.traces.size() << "\n"
                      << assignment_line(solution.assignment) << "\n";
            if (verbose) print_traces(solution.traces);
            if (!out_path.empty()) write_row_csv(out_path, row);
            report_time(timer);
            return 0;
        }

        if (app.got_subcommand(cmd_verify)) {
            const int rc = run_verify(check, n_min, n_max, out_path);
            report_time(timer);
            return rc;
        }

        if (app.got_subcommand(cmd_sweep)) {
            const int rc = run_sweep(n_min, n_max, out_path);
            report_time(timer);
            return rc;
        }
    } catch (const qaoa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
