#pragma once

#include <vector>

#include "qaoa/errors.hpp"

namespace qaoa {

// Closed-form level-1 quantities for MAX-CUT on the complete graph K_2n.
// Throughout, d = 2n - 2 and n >= 2.

// Per-edge cut expectation:
// <C_ij> = 1/2 - 1/4 sin^2(2b)(1 - cos^d(2g)) + 1/2 sin(4b) sin(g) cos^d(g).
double expected_edge_cost(int n, double gamma, double beta);

// <Z_i Z_j> = 1 - 2 <C_ij>; negative wherever the cut gain is positive.
double edge_correlation(int n, double gamma, double beta);

// <C_ij> - 1/2 as a function of both angles.
double edge_cost_gain(int n, double gamma, double beta);

// arctan argument x(g) = 4 sin(g) cos^d(g) / (1 - cos^d(2g)).
double arctan_argument(int n, double gamma);

// Stationary beta* = arctan(x(g)) / 4 on the branch 4b in (0, pi/2);
// gamma must lie in (0, pi/2), away from the singular endpoints.
double optimal_beta(int n, double gamma);

// Gain at the stationary beta, rewritten so it is defined everywhere:
// f(g) = 1/8 (sqrt((1 - cos^d(2g))^2 + 16 sin^2(g) cos^{2d}(g))
//             - (1 - cos^d(2g))).
double f_reduced(int n, double gamma);

struct GammaProfile {
    double gamma = 0.0;
    double beta_star = 0.0;
    double f_value = 0.0;
    double x_value = 0.0;
};

// argmax of f over gamma in [0, pi/2]: dense scan at step 1e-3 plus
// golden-section refinement to 1e-10. Deterministic.
GammaProfile maximize_f(int n);

// Level-1 approximation ratio (2n-1)(1/2 + max f)/n on K_2n,
// using C_max = n^2.
double qaoa1_ratio(int n);

// g(t) = 4/(4n-1)^2 + (1 - (2t-1)^d)/(4n-1) - (1-t) t^d for t in [0,1].
double g_function(int n, double t);
double g_derivative(int n, double t);

struct GCriticalPoint {
    double t = 0.0;
    double g_value = 0.0;
};

struct GPositivityReport {
    int n = 0;
    double grid_step = 0.0;
    double min_value = 0.0;
    double argmin = 0.0;
    std::vector<GCriticalPoint> critical_points;  // interior, via g' bisection
    double critical_bound = 0.0;  // (4n-13)/(4(n-1)(4n-1)^2)
    bool all_critical_above_bound = false;
    bool positive = false;  // min over the grid and critical points > 0
};

// Certifies min_t g(t) > 0 by dense scan plus sign-change bisection on g'.
// A non-positive minimum yields a failing report, not an exception.
GPositivityReport verify_g_positivity(int n, double grid_step = 1e-4);

}  // namespace qaoa
