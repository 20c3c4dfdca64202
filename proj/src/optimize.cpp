#include "qaoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "golden.hpp"
#include "sim_internal.hpp"

namespace qaoa {

using detail::golden_max;

namespace {

// Standard Nelder-Mead on the negated objective, reflection 1, expansion 2,
// contraction 0.5, shrink 0.5.
std::vector<double> nelder_mead_max(
    const std::function<double(const std::vector<double>&)>& fn,
    std::vector<double> x0, double step, int max_iters, double ftol) {
    const int n = static_cast<int>(x0.size());
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (int i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> values(n + 1);
    for (int i = 0; i <= n; ++i) values[i] = fn(simplex[i]);

    auto order = [&] {
        std::vector<int> idx(n + 1);
        for (int i = 0; i <= n; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return values[a] > values[b]; });
        std::vector<std::vector<double>> sx(n + 1);
        std::vector<double> sv(n + 1);
        for (int i = 0; i <= n; ++i) {
            sx[i] = simplex[idx[i]];
            sv[i] = values[idx[i]];
        }
        simplex.swap(sx);
        values.swap(sv);
    };

    for (int iter = 0; iter < max_iters; ++iter) {
        order();
        if (values[0] - values[n] < ftol) break;

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) centroid[k] += simplex[i][k] / n;

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (int k = 0; k < n; ++k)
                p[k] = centroid[k] + t * (centroid[k] - simplex[n][k]);
            return p;
        };

        auto reflected = blend(1.0);
        const double fr = fn(reflected);
        if (fr > values[0]) {
            auto expanded = blend(2.0);
            const double fe = fn(expanded);
            if (fe > fr) {
                simplex[n] = expanded;
                values[n] = fe;
            } else {
                simplex[n] = reflected;
                values[n] = fr;
            }
        } else if (fr > values[n - 1]) {
            simplex[n] = reflected;
            values[n] = fr;
        } else {
            auto contracted = blend(fr > values[n] ? 0.5 : -0.5);
            const double fc = fn(contracted);
            if (fc > std::max(fr, values[n])) {
                simplex[n] = contracted;
                values[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int k = 0; k < n; ++k)
                        simplex[i][k] =
                            simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
                    values[i] = fn(simplex[i]);
                }
            }
        }
    }
    order();
    return simplex[0];
}

struct Tracker {
    const detail::SimContext& ctx;
    int level;
    std::vector<std::complex<double>> scratch;
    ParameterSchedule best_schedule;
    double best_value = -std::numeric_limits<double>::infinity();
    long evaluations = 0;

    Tracker(const detail::SimContext& ctx_, int level_)
        : ctx(ctx_), level(level_) {}

    // params = [gamma_1..gamma_p, beta_1..beta_p]
    double eval(const std::vector<double>& params) {
        ParameterSchedule schedule;
        schedule.level = level;
        schedule.gammas.assign(params.begin(), params.begin() + level);
        schedule.betas.assign(params.begin() + level, params.end());
        ctx.run_schedule(schedule, scratch);
        const double value = ctx.expectation(scratch);
        ++evaluations;
        if (value > best_value) {
            best_value = value;
            best_schedule = schedule;
        }
        return value;
    }
};

}  // namespace

OptimizationReport optimize_schedule(const IsingModel& model, int p,
                                     const OptimizerConfig& config) {
    if (p < 1) throw DomainError("level must be >= 1");
    detail::SimContext ctx(model);
    Tracker tracker(ctx, p);

    if (p == 1) {
        const double dg = config.gamma_period / config.grid_gamma;
        const double db = config.beta_period / config.grid_beta;
        for (int gi = 0; gi < config.grid_gamma; ++gi)
            for (int bi = 0; bi < config.grid_beta; ++bi)
                tracker.eval({gi * dg, bi * db});

        // Coordinate-wise golden-section refinement around the grid best.
        double gamma = tracker.best_schedule.gammas[0];
        double beta = tracker.best_schedule.betas[0];
        for (int sweep = 0; sweep < config.max_refine_sweeps; ++sweep) {
            const double new_gamma = golden_max(
                [&](double g) { return tracker.eval({g, beta}); }, gamma - dg,
                gamma + dg, config.refine_tolerance);
            const double new_beta = golden_max(
                [&](double b) { return tracker.eval({new_gamma, b}); },
                beta - db, beta + db, config.refine_tolerance);
            const double moved =
                std::max(std::abs(new_gamma - gamma), std::abs(new_beta - beta));
            gamma = new_gamma;
            beta = new_beta;
            if (moved < config.refine_tolerance) break;
        }
        OptimizationReport report{tracker.best_schedule, tracker.best_value,
                                  tracker.evaluations,
                                  "grid" + std::to_string(config.grid_gamma) +
                                      "x" + std::to_string(config.grid_beta) +
                                      "+golden"};
        return report;
    }

    // p >= 2: fixed-seed multistart plus simplex refinement.
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> ug(0.0, config.gamma_period);
    std::uniform_real_distribution<double> ub(0.0, config.beta_period);
    std::vector<std::vector<double>> starts;
    {
        // Linear ramp start: gammas rise, betas fall over the layers.
        std::vector<double> ramp(2 * p);
        for (int k = 0; k < p; ++k) {
            ramp[k] = 0.6 * (k + 1) / p;
            ramp[p + k] = 0.6 * (1.0 - static_cast<double>(k) / p);
        }
        starts.push_back(std::move(ramp));
    }
    for (int s = 1; s < std::max(1, config.multistarts); ++s) {
        std::vector<double> x(2 * p);
        for (int k = 0; k < p; ++k) x[k] = ug(rng);
        for (int k = 0; k < p; ++k) x[p + k] = ub(rng);
        starts.push_back(std::move(x));
    }
    auto fn = [&](const std::vector<double>& x) { return tracker.eval(x); };
    for (const auto& start : starts)
        nelder_mead_max(fn, start, 0.15, config.simplex_max_iters, 1e-12);

    OptimizationReport report{tracker.best_schedule, tracker.best_value,
                              tracker.evaluations,
                              "multistart" +
                                  std::to_string(std::max(1, config.multistarts)) +
                                  "+nelder-mead"};
    return report;
}

}  // namespace qaoa
