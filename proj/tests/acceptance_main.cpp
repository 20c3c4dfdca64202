// Acceptance suite: end-to-end checks of the two headline claims (recursive
// level-1 exactness on K_2n, the strict level-1 ratio bound) plus the
// numerical machinery behind them. One PASS/FAIL line per criterion; exit
// code 1 if any fails. Every tolerance is pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qaoa/analytic.hpp"
#include "qaoa/ising.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/rqaoa.hpp"
#include "qaoa/statevector.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

using qaoa::IsingModel;
using qaoa::SpinAssignment;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& message) {
        if (!condition) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << message;
        }
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Full 2^m enumeration with direct energy evaluation: the independent
// oracle for brute_force_max. Mask order equals lexicographic assignment
// order (earliest vertex most significant, +1 before -1).
std::pair<SpinAssignment, double> exhaustive_max(const IsingModel& model) {
    const auto& verts = model.vertices();
    const int m = static_cast<int>(verts.size());
    SpinAssignment best;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        SpinAssignment x;
        for (int i = 0; i < m; ++i)
            x[verts[i]] = ((mask >> (m - 1 - i)) & 1) ? -1 : 1;
        const double e = qaoa::energy(model, x);
        if (e > best_value) {
            best_value = e;
            best = x;
        }
    }
    return {best, best_value};
}

IsingModel random_model(std::mt19937_64& rng, int num_vertices) {
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<qaoa::WeightedEdge> edges;
    for (int i = 0; i < num_vertices; ++i)
        for (int j = i + 1; j < num_vertices; ++j)
            if (coin(rng) < 0.7) edges.push_back({i, j, weight(rng)});
    if (edges.empty()) edges.push_back({0, 1, weight(rng)});
    return qaoa::maxcut_model(edges);
}

// --- criteria ---------------------------------------------------------------

// Level-1 recursion with exact statevector correlations returns the n^2
// optimum on K_2n for 2n = 4..12.
Outcome criterion_rqaoa_exact_statevector() {
    Outcome out;
    for (int two_n = 4; two_n <= 12; two_n += 2) {
        qaoa::RqaoaConfig config;
        config.threshold = 4;
        config.correlations = qaoa::CorrelationSource::statevector;
        const qaoa::RqaoaSolution solution =
            qaoa::run_rqaoa(qaoa::complete_model(two_n), config);
        const long n = two_n / 2;
        const double expected = static_cast<double>(n) * n;
        out.require(std::abs(solution.value - expected) <= 1e-9,
                    "2n=" + std::to_string(two_n) + " value " +
                        fmt(solution.value) + " != " + fmt(expected));
        out.require(std::llround(solution.value) == n * n,
                    "2n=" + std::to_string(two_n) + " integer mismatch");
        out.require(solution.ratio && std::abs(*solution.ratio - 1.0) <= 1e-9,
                    "2n=" + std::to_string(two_n) + " ratio != 1");
    }
    out.detail << (out.pass ? "value = n^2 for 2n in {4..12}, nc=4" : "");
    return out;
}

// Analytic correlation provider scales the same exactness to 2n = 14..40;
// C_max = n^2 cross-checked by brute force where feasible.
Outcome criterion_rqaoa_exact_analytic() {
    Outcome out;
    for (int two_n = 4; two_n <= 12; two_n += 2) {
        const long n = two_n / 2;
        out.require(qaoa::brute_force_max(qaoa::complete_model(two_n)).second ==
                        static_cast<double>(n) * n,
                    "brute C_max mismatch at 2n=" + std::to_string(two_n));
    }
    for (int two_n = 14; two_n <= 40; two_n += 2) {
        qaoa::RqaoaConfig config;
        config.threshold = 4;
        config.correlations = qaoa::CorrelationSource::analytic;
        const qaoa::RqaoaSolution solution =
            qaoa::run_rqaoa(qaoa::complete_model(two_n), config);
        const long n = two_n / 2;
        out.require(std::abs(solution.value - static_cast<double>(n) * n) <=
                            1e-9 &&
                        std::llround(solution.value) == n * n,
                    "2n=" + std::to_string(two_n) + " value " +
                        fmt(solution.value));
    }
    out.detail << (out.pass ? "value = n^2 for 2n in {14..40}" : "");
    return out;
}

// Level-1 ratio strictly below 1, and below 1 - 1/(8n^2) from n = 4 on,
// through the intermediate 1 - 1/(2n(4n-1)) bound.
Outcome criterion_qaoa_bound() {
    Outcome out;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 200; ++n) {
        const double ratio = qaoa::qaoa1_ratio(n);
        out.require(ratio < 1.0, "ratio >= 1 at n=" + std::to_string(n));
        if (n < 4) continue;
        const double intermediate = 1.0 - 1.0 / (2.0 * n * (4.0 * n - 1.0));
        const double bound = 1.0 - 1.0 / (8.0 * n * n);
        out.require(ratio < intermediate,
                    "intermediate bound fails at n=" + std::to_string(n));
        out.require(intermediate < bound,
                    "bound chain fails at n=" + std::to_string(n));
        out.require(ratio < bound, "bound fails at n=" + std::to_string(n));
        worst_margin = std::min(worst_margin, bound - ratio);
    }
    if (out.pass)
        out.detail << "ratio < 1 - 1/(8n^2) for n in 4..200, min margin "
                   << fmt(worst_margin);
    return out;
}

// Statevector and closed-form per-edge costs agree to 1e-9 on a 21x21
// angle grid for K_4..K_10.
Outcome criterion_oracle_agreement() {
    Outcome out;
    double max_dev = 0.0;
    for (int n = 2; n <= 5; ++n) {
        const IsingModel model = qaoa::complete_model(2 * n);
        for (int gi = 0; gi <= 20; ++gi) {
            for (int bi = 0; bi <= 20; ++bi) {
                const double gamma = gi * 2.0 * kPi / 20.0;
                const double beta = bi * kPi / 20.0;
                const qaoa::Statevector state =
                    qaoa::qaoa_state(model, {1, {gamma}, {beta}});
                const double analytic =
                    qaoa::expected_edge_cost(n, gamma, beta);
                for (const auto& [key, j] : model.couplings()) {
                    const double simulated =
                        0.5 * (1.0 - qaoa::correlation(state, key.first,
                                                       key.second));
                    max_dev =
                        std::max(max_dev, std::abs(simulated - analytic));
                }
            }
        }
    }
    out.require(max_dev <= 1e-9, "max deviation " + fmt(max_dev) + " > 1e-9");
    out.detail << "max |simulated - closed form| = " << fmt(max_dev);
    return out;
}

// g(t) stays positive on [0,1] for n = 2..100; interior critical values
// clear (4n-13)/(4(n-1)(4n-1)^2) from n = 4 on.
Outcome criterion_g_positivity() {
    Outcome out;
    double min_g = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 100; ++n) {
        const qaoa::GPositivityReport report =
            qaoa::verify_g_positivity(n, 1e-4);
        min_g = std::min(min_g, report.min_value);
        out.require(report.positive, "min g <= 0 at n=" + std::to_string(n));
        if (n >= 4) {
            out.require(report.all_critical_above_bound,
                        "critical value below bound at n=" +
                            std::to_string(n));
            for (const auto& cp : report.critical_points)
                out.require(cp.g_value > report.critical_bound,
                            "critical point fails at n=" + std::to_string(n));
        }
    }
    out.detail << "min over all n of min_t g(t) = " << fmt(min_g);
    return out;
}

// The stationary beta really is stationary, and the reduced form equals the
// two-angle form there.
Outcome criterion_stationarity() {
    Outcome out;
    double max_derivative = 0.0;
    double max_mismatch = 0.0;
    for (int n = 2; n <= 10; ++n) {
        std::mt19937_64 rng(4242 + n);
        std::uniform_real_distribution<double> gamma_dist(0.01,
                                                          kPi / 2.0 - 0.01);
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
    }
    out.require(max_derivative <= 1e-6,
                "max |df/dbeta| " + fmt(max_derivative) + " > 1e-6");
    out.require(max_mismatch <= 1e-12,
                "f_reduced mismatch " + fmt(max_mismatch) + " > 1e-12");
    out.detail << "max |df/dbeta| = " << fmt(max_derivative)
               << ", max |f_reduced - f| = " << fmt(max_mismatch);
    return out;
}

// Contraction preserves energies under lifting, exhaustively over reduced
// assignments; brute force matches the independent enumeration oracle.
Outcome criterion_contraction_soundness() {
    Outcome out;
    std::mt19937_64 rng(987654321);
    double max_identity_dev = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int size = 3 + static_cast<int>(rng() % 8);  // 3..10 vertices
        const IsingModel model = random_model(rng, size);

        const auto [oracle_x, oracle_value] = exhaustive_max(model);
        const auto [fast_x, fast_value] = qaoa::brute_force_max(model);
        out.require(fast_value == oracle_value,
                    "brute value mismatch, trial " + std::to_string(trial));
        out.require(fast_x == oracle_x,
                    "brute argmax mismatch, trial " + std::to_string(trial));

        const auto& verts = model.vertices();
        for (std::size_t a = 0; a < verts.size(); ++a) {
            for (std::size_t b = 0; b < verts.size(); ++b) {
                if (a == b) continue;
                for (int sign : {1, -1}) {
                    const int k = verts[a], l = verts[b];
                    const auto [reduced, record] =
                        qaoa::contract(model, k, l, sign);
                    const auto& rv = reduced.vertices();
                    const int rm = static_cast<int>(rv.size());
                    for (std::uint64_t mask = 0;
                         mask < (std::uint64_t{1} << rm); ++mask) {
                        SpinAssignment xr;
                        for (int i = 0; i < rm; ++i)
                            xr[rv[i]] = (mask >> i) & 1 ? -1 : 1;
                        SpinAssignment lifted = xr;
                        lifted[k] = sign * xr.at(l);
                        const double dev =
                            std::abs(qaoa::energy(model, lifted) -
                                     qaoa::energy(reduced, xr));
                        max_identity_dev = std::max(max_identity_dev, dev);
                    }
                }
            }
        }
    }
    out.require(max_identity_dev <= 1e-12,
                "energy identity deviation " + fmt(max_identity_dev));
    out.detail << "200 models, max lift deviation = " << fmt(max_identity_dev);
    return out;
}

// At the optimized level-1 schedule on K_2n every pairwise correlation is the
// same value, and that value is strictly negative.
Outcome criterion_correlation_sign_symmetry() {
    Outcome out;
    for (int n = 2; n <= 5; ++n) {
        const IsingModel model = qaoa::complete_model(2 * n);
        const qaoa::OptimizationReport report =
            qaoa::optimize_schedule(model, 1);
        const qaoa::Statevector state =
            qaoa::qaoa_state(model, report.best_schedule);
        const double reference = qaoa::correlation(state, 0, 1);
        for (const auto& [key, j] : model.couplings()) {
            const double m_ij =
                qaoa::correlation(state, key.first, key.second);
            out.require(m_ij < 0.0, "M >= 0 at n=" + std::to_string(n));
            out.require(std::abs(m_ij - reference) <= 1e-10,
                        "asymmetric correlations at n=" + std::to_string(n));
        }
        if (n == 5)
            out.detail << "K_10 optimized correlation = " << fmt(reference);
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"rqaoa level-1 exact on K_2n, statevector correlations",
         criterion_rqaoa_exact_statevector},
        {"rqaoa level-1 exact at scale, analytic correlations",
         criterion_rqaoa_exact_analytic},
        {"qaoa level-1 ratio strictly below 1 - 1/(8n^2)",
         criterion_qaoa_bound},
        {"statevector vs closed-form edge cost within 1e-9",
         criterion_oracle_agreement},
        {"g(t) positivity with critical-point bound",
         criterion_g_positivity},
        {"beta stationarity and reduced-form identity",
         criterion_stationarity},
        {"contraction energy identity and brute-force oracle",
         criterion_contraction_soundness},
        {"optimized correlations equal and negative on K_2n",
         criterion_correlation_sign_symmetry},
    };

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = criteria[i].run();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        all_pass = all_pass && outcome.pass;
        std::printf("[%s] criterion %zu: %s — %s (%.1f s)\n",
                    outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), outcome.detail.str().c_str(),
                    seconds);
        std::fflush(stdout);
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILED");
    return all_pass ? 0 : 1;
}
