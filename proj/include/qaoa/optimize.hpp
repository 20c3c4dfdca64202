#pragma once

#include <cstdint>
#include <string>

#include "qaoa/ising.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa {

// Deterministic search settings. Level 1 uses an exhaustive grid over one
// period of each angle followed by coordinate-wise golden-section refinement;
// higher levels use a fixed-seed multistart with Nelder-Mead refinement.
struct OptimizerConfig {
    int grid_gamma = 64;
    int grid_beta = 64;
    double gamma_period = 6.283185307179586476925286766559;  // 2*pi
    double beta_period = 3.1415926535897932384626433832795;  // pi
    double refine_tolerance = 1e-9;
    int max_refine_sweeps = 60;
    int multistarts = 8;
    std::uint64_t seed = 0x9aa0a5eed;
    int simplex_max_iters = 600;
};

struct OptimizationReport {
    ParameterSchedule best_schedule;
    double best_value = 0.0;
    long evaluations = 0;
    std::string strategy;
};

// Maximizes F_p(gamma, beta) = <psi_p|H|psi_p>. best_value is the maximum
// over every evaluated point; identical config and model give identical
// reports.
OptimizationReport optimize_schedule(const IsingModel& model, int p,
                                     const OptimizerConfig& config = {});

}  // namespace qaoa
