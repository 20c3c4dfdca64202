#include "qaoa/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "golden.hpp"

namespace qaoa {

namespace {

void check_n(int n) {
    if (n < 2) throw DomainError("complete-graph half-count n must be >= 2");
}

void check_t(double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("t must lie in [0, 1]");
}

// Integer power by repeated squaring; exact sign handling for negative bases.
double int_pow(double base, int exponent) {
    double result = 1.0;
    double factor = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= factor;
        factor *= factor;
    }
    return result;
}

constexpr double kHalfPi = 1.5707963267948966192313216916398;
constexpr double kScanStep = 1e-3;

}  // namespace

double edge_cost_gain(int n, double gamma, double beta) {
    check_n(n);
    const int d = 2 * n - 2;
    const double s2b = std::sin(2.0 * beta);
    const double s4b = std::sin(4.0 * beta);
    const double cd_gamma = int_pow(std::cos(gamma), d);
    const double cd_2gamma = int_pow(std::cos(2.0 * gamma), d);
    return 0.5 * s4b * std::sin(gamma) * cd_gamma -
           0.25 * s2b * s2b * (1.0 - cd_2gamma);
}

double expected_edge_cost(int n, double gamma, double beta) {
    return 0.5 + edge_cost_gain(n, gamma, beta);
}

double edge_correlation(int n, double gamma, double beta) {
    return 1.0 - 2.0 * expected_edge_cost(n, gamma, beta);
}

double arctan_argument(int n, double gamma) {
    check_n(n);
    const int d = 2 * n - 2;
    const double denominator = 1.0 - int_pow(std::cos(2.0 * gamma), d);
    if (denominator == 0.0)
        throw DomainError("singular point: 1 - cos^d(2 gamma) vanishes");
    return 4.0 * std::sin(gamma) * int_pow(std::cos(gamma), d) / denominator;
}

double optimal_beta(int n, double gamma) {
    return std::atan(arctan_argument(n, gamma)) / 4.0;
}

double f_reduced(int n, double gamma) {
    check_n(n);
    const int d = 2 * n - 2;
    const double a = 1.0 - int_pow(std::cos(2.0 * gamma), d);
    const double cd = int_pow(std::cos(gamma), d);
    const double s = std::sin(gamma);
    return 0.125 * (std::sqrt(a * a + 16.0 * s * s * cd * cd) - a);
}

GammaProfile maximize_f(int n) {
    check_n(n);
    double best_gamma = 0.0;
    double best_value = f_reduced(n, 0.0);
    for (double gamma = kScanStep; gamma < kHalfPi; gamma += kScanStep) {
        const double value = f_reduced(n, gamma);
        if (value > best_value) {
            best_value = value;
            best_gamma = gamma;
        }
    }
    if (const double value = f_reduced(n, kHalfPi); value > best_value) {
        best_value = value;
        best_gamma = kHalfPi;
    }

    const double lo = std::max(0.0, best_gamma - kScanStep);
    const double hi = std::min(kHalfPi, best_gamma + kScanStep);
    const double refined = detail::golden_max(
        [&](double g) { return f_reduced(n, g); }, lo, hi, 1e-10);
    if (f_reduced(n, refined) > best_value) best_gamma = refined;

    GammaProfile profile;
    profile.gamma = best_gamma;
    profile.beta_star = optimal_beta(n, best_gamma);
    profile.x_value = arctan_argument(n, best_gamma);
    profile.f_value = edge_cost_gain(n, best_gamma, profile.beta_star);
    return profile;
}

double qaoa1_ratio(int n) {
    const GammaProfile profile = maximize_f(n);
    return (2.0 * n - 1.0) * (0.5 + profile.f_value) / n;
}

double g_function(int n, double t) {
    check_n(n);
    check_t(t);
    const int d = 2 * n - 2;
    const double q = 4.0 * n - 1.0;
    return 4.0 / (q * q) + (1.0 - int_pow(2.0 * t - 1.0, d)) / q -
           (1.0 - t) * int_pow(t, d);
}

double g_derivative(int n, double t) {
    check_n(n);
    check_t(t);
    const double q = 4.0 * n - 1.0;
    return -((4.0 * n - 4.0) / q) * int_pow(2.0 * t - 1.0, 2 * n - 3) +
           int_pow(t, 2 * n - 3) * (-(2.0 * n - 2.0) + (2.0 * n - 1.0) * t);
}

GPositivityReport verify_g_positivity(int n, double grid_step) {
    check_n(n);
    if (!(grid_step > 0.0 && grid_step <= 1e-3))
        throw DomainError("grid_step must lie in (0, 1e-3]");

    GPositivityReport report;
    report.n = n;
    report.grid_step = grid_step;
    report.critical_bound =
        (4.0 * n - 13.0) / (4.0 * (n - 1.0) * (4.0 * n - 1.0) * (4.0 * n - 1.0));

    // Dense scan, endpoints included exactly.
    std::vector<double> grid;
    for (std::size_t k = 0; k * grid_step < 1.0; ++k)
        grid.push_back(k * grid_step);
    grid.push_back(1.0);

    report.min_value = g_function(n, grid[0]);
    report.argmin = grid[0];
    for (double t : grid) {
        const double value = g_function(n, t);
        if (value < report.min_value) {
            report.min_value = value;
            report.argmin = t;
        }
    }

    // Interior critical points from sign changes of g'.
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        double lo = grid[k], hi = grid[k + 1];
        double dlo = g_derivative(n, lo);
        const double dhi = g_derivative(n, hi);
        double t_star;
        if (dlo == 0.0) {
            t_star = lo;
        } else if (dlo * dhi < 0.0) {
            for (int iter = 0; iter < 60; ++iter) {
                const double mid = 0.5 * (lo + hi);
                const double dmid = g_derivative(n, mid);
                if (dmid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (dlo * dmid < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    dlo = dmid;
                }
            }
            t_star = 0.5 * (lo + hi);
        } else {
            continue;
        }
        if (t_star <= 0.0 || t_star >= 1.0) continue;
        report.critical_points.push_back({t_star, g_function(n, t_star)});
    }

    report.all_critical_above_bound = true;
    for (const auto& cp : report.critical_points) {
        if (cp.g_value < report.min_value) {
            report.min_value = cp.g_value;
            report.argmin = cp.t;
        }
        if (!(cp.g_value > report.critical_bound))
            report.all_critical_above_bound = false;
    }
    report.positive = report.min_value > 0.0;
    return report;
}

}  // namespace qaoa
