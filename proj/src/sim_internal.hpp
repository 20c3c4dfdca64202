#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "qaoa/ising.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa::detail {

// Precomputed diagonal of sum J_ij Z_i Z_j over the register of a model.
// Built once and shared across many schedule evaluations.
struct SimContext {
    std::vector<int> order;  // register position -> vertex id, ascending
    std::size_t dim = 0;
    double offset = 0.0;
    std::vector<double> diag;  // E_J per basis state, offset excluded
    std::vector<std::pair<int, int>> pair_positions;
    std::vector<double> pair_couplings;

    explicit SimContext(const IsingModel& model);

    // Overwrites amps with the level-p QAOA state for the schedule.
    void run_schedule(const ParameterSchedule& schedule,
                      std::vector<std::complex<double>>& amps) const;

    // offset + sum_x |amp(x)|^2 E_J(x)
    double expectation(const std::vector<std::complex<double>>& amps) const;
};

void apply_phase_inplace(const std::vector<double>& diag, double gamma,
                         std::vector<std::complex<double>>& amps);
void apply_mixer_inplace(int num_qubits, double beta,
                         std::vector<std::complex<double>>& amps);
double correlation_at(const std::vector<std::complex<double>>& amps, int pos_i,
                      int pos_j);

void check_schedule(const ParameterSchedule& schedule);

}  // namespace qaoa::detail
