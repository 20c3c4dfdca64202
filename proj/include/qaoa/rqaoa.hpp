#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qaoa/ising.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa {

enum class CorrelationSource { statevector, analytic, auto_select };
enum class TieBreak { lexicographic, seeded_random };

struct RqaoaConfig {
    int level = 1;
    // Recursion stops once the non-isolated vertex count is <= threshold.
    int threshold = 8;
    CorrelationSource correlations = CorrelationSource::auto_select;
    TieBreak tie_break = TieBreak::lexicographic;
    std::uint64_t seed = 0;
    // All |M| below this aborts the round: rounding on noise is unsound.
    double degenerate_tolerance = 1e-12;
    // |M| within this of the maximum count as tied for selection.
    double tie_tolerance = 1e-9;
    int brute_force_cap = kDefaultBruteForceCap;
    OptimizerConfig optimizer;
    // Test hook: skip optimization and evaluate correlations at this
    // schedule (forces the statevector provider).
    std::optional<ParameterSchedule> forced_schedule;
};

struct RoundTrace {
    int round = 0;
    int eliminated = 0;
    int surviving = 0;
    double correlation = 0.0;  // M at the chosen pair
    int sign = 0;
    int active_before = 0;
    int active_after = 0;
    ParameterSchedule schedule;
    double expectation = 0.0;  // F at the round's schedule
    std::string provider;      // "statevector" or "analytic"

    bool operator==(const RoundTrace&) const = default;
};

struct RqaoaSolution {
    SpinAssignment assignment;  // over the original vertex set
    double value = 0.0;         // energy of `assignment` on the original model
    std::optional<double> optimum;  // brute force, when within cap
    std::optional<double> ratio;
    std::vector<RoundTrace> traces;
    ConstraintStack stack;
};

// Non-isolated vertex set and the common coupling value, iff the couplings
// form a complete graph on that set with equal coefficients within 1e-12.
std::optional<std::pair<std::vector<int>, double>> is_uniform_complete(
    const IsingModel& model);

// One elimination: optimize the round's QAOA state, measure every edge
// correlation, pick the pair with the largest |M| (ties per config), impose
// x_k = sgn(M) x_l with the higher index eliminated, and contract.
std::tuple<IsingModel, ConstraintRecord, RoundTrace> rqaoa_round(
    const IsingModel& model, const RqaoaConfig& config = {},
    int round_index = 0);

// Full recursion: rounds until the threshold, brute force over the residual
// model, reconstruction through the constraint stack. The returned value is
// re-evaluated on the original model and checked against the residual
// optimum.
RqaoaSolution run_rqaoa(const IsingModel& model, const RqaoaConfig& config = {});

}  // namespace qaoa
