#include "qaoa/rqaoa.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qaoa/analytic.hpp"

namespace qaoa {

namespace {

struct RoundCorrelations {
    std::vector<std::pair<VertexPair, double>> values;  // canonical order
    ParameterSchedule schedule;
    double expectation = 0.0;
    const char* provider = "";
};

bool analytic_applicable(const IsingModel& model, const RqaoaConfig& config,
                         const std::vector<int>& active, double* weight) {
    if (config.level != 1 || config.forced_schedule) return false;
    const auto uniform = is_uniform_complete(model);
    if (!uniform) return false;
    if (uniform->first.size() < 4 || uniform->first.size() % 2 != 0)
        return false;
    if (uniform->second >= 0.0) return false;  // MAX-CUT couplings are negative
    if (uniform->first != active) return false;
    *weight = uniform->second;
    return true;
}

RoundCorrelations analytic_correlations(const IsingModel& model,
                                        double weight,
                                        const std::vector<int>& active) {
    const int n = static_cast<int>(active.size()) / 2;
    const GammaProfile profile = maximize_f(n);
    const double m_value =
        edge_correlation(n, profile.gamma, profile.beta_star);

    // The closed forms assume unit MAX-CUT weights (J = -1/2). A uniform
    // rescaling of the couplings only rescales gamma, so correlations at the
    // optimum carry over with gamma mapped back to the model's scale.
    const double scale = -2.0 * weight;

    RoundCorrelations out;
    out.provider = "analytic";
    out.schedule = ParameterSchedule{1, {profile.gamma / scale},
                                     {profile.beta_star}};
    double coupling_sum = 0.0;
    for (const auto& [key, j] : model.couplings()) {
        out.values.push_back({key, m_value});
        coupling_sum += j;
    }
    out.expectation = model.offset() + coupling_sum * m_value;
    return out;
}

RoundCorrelations statevector_correlations(const IsingModel& model,
                                           const RqaoaConfig& config,
                                           const std::vector<int>& active) {
    // Isolated vertices factor out of every correlation as |+> tensor
    // factors; simulate the active sub-register only.
    const IsingModel restricted(active, model.couplings(), model.offset());

    RoundCorrelations out;
    out.provider = "statevector";
    if (config.forced_schedule) {
        out.schedule = *config.forced_schedule;
    } else {
        const OptimizationReport report =
            optimize_schedule(restricted, config.level, config.optimizer);
        out.schedule = report.best_schedule;
    }
    const Statevector state = qaoa_state(restricted, out.schedule);
    out.expectation = expectation_energy(state, restricted);
    for (const auto& [key, j] : model.couplings())
        out.values.push_back({key, correlation(state, key.first, key.second)});
    return out;
}

}  // namespace

std::optional<std::pair<std::vector<int>, double>> is_uniform_complete(
    const IsingModel& model) {
    const std::vector<int> active = model.non_isolated();
    if (active.size() < 2) return std::nullopt;
    const std::size_t expected = active.size() * (active.size() - 1) / 2;
    if (model.couplings().size() != expected) return std::nullopt;
    const double weight = model.couplings().begin()->second;
    for (const auto& [key, j] : model.couplings())
        if (std::abs(j - weight) > 1e-12) return std::nullopt;
    return std::make_pair(active, weight);
}

std::tuple<IsingModel, ConstraintRecord, RoundTrace> rqaoa_round(
    const IsingModel& model, const RqaoaConfig& config, int round_index) {
    if (model.couplings().empty())
        throw NothingToContractError("model has no couplings left");
    const std::vector<int> active = model.non_isolated();

    RoundCorrelations correlations;
    double weight = 0.0;
    switch (config.correlations) {
        case CorrelationSource::analytic:
        case CorrelationSource::auto_select:
            if (analytic_applicable(model, config, active, &weight)) {
                correlations = analytic_correlations(model, weight, active);
                break;
            }
            [[fallthrough]];
        case CorrelationSource::statevector:
            correlations = statevector_correlations(model, config, active);
            break;
    }

    double max_abs = 0.0;
    for (const auto& [pair, m] : correlations.values)
        max_abs = std::max(max_abs, std::abs(m));
    if (max_abs < config.degenerate_tolerance)
        throw DegenerateCorrelationError(
            "all correlations are below the degenerate tolerance");

    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < correlations.values.size(); ++c)
        if (std::abs(correlations.values[c].second) >=
            max_abs - config.tie_tolerance)
            candidates.push_back(c);

    std::size_t chosen = candidates.front();  // lexicographic default
    if (config.tie_break == TieBreak::seeded_random && candidates.size() > 1) {
        std::mt19937_64 rng(config.seed +
                            0x9e3779b97f4a7c15ULL * (round_index + 1));
        chosen = candidates[rng() % candidates.size()];
    }

    const auto& [pair, m_value] = correlations.values[chosen];
    const int sign = m_value > 0.0 ? 1 : -1;
    const int eliminated = std::max(pair.first, pair.second);
    const int surviving = std::min(pair.first, pair.second);

    auto [contracted, record] = contract(model, eliminated, surviving, sign);

    RoundTrace trace;
    trace.round = round_index;
    trace.eliminated = eliminated;
    trace.surviving = surviving;
    trace.correlation = m_value;
    trace.sign = sign;
    trace.active_before = static_cast<int>(active.size());
    trace.active_after = static_cast<int>(contracted.non_isolated().size());
    trace.schedule = correlations.schedule;
    trace.expectation = correlations.expectation;
    trace.provider = correlations.provider;

    return {std::move(contracted), record, std::move(trace)};
}

RqaoaSolution run_rqaoa(const IsingModel& model, const RqaoaConfig& config) {
    if (config.threshold < 2) throw DomainError("threshold must be >= 2");
    if (config.level < 1) throw DomainError("level must be >= 1");
    if (config.threshold > config.brute_force_cap)
        throw SizeLimitError("threshold exceeds the brute-force cap");

    RqaoaSolution solution;
    IsingModel current = model;
    int round = 0;
    while (static_cast<int>(current.non_isolated().size()) > config.threshold) {
        auto [contracted, record, trace] = rqaoa_round(current, config, round);
        solution.stack.chain(record);
        solution.traces.push_back(std::move(trace));
        current = std::move(contracted);
        ++round;
    }

    const auto [base, residual_value] =
        brute_force_max(current, config.brute_force_cap);
    solution.assignment = reconstruct(solution.stack, base);
    solution.value = energy(model, solution.assignment);
    if (std::abs(solution.value - residual_value) > 1e-9)
        throw Error("offset bookkeeping drift: residual optimum " +
                    std::to_string(residual_value) +
                    " vs re-evaluated energy " + std::to_string(solution.value));

    if (model.num_vertices() <= config.brute_force_cap) {
        solution.optimum = brute_force_max(model, config.brute_force_cap).second;
        if (*solution.optimum != 0.0)
            solution.ratio = solution.value / *solution.optimum;
    }
    return solution;
}

}  // namespace qaoa
