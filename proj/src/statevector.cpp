#include "qaoa/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qaoa/parallel.hpp"
#include "sim_internal.hpp"

namespace qaoa {

namespace detail {

SimContext::SimContext(const IsingModel& model) {
    const int n = model.num_vertices();
    if (n < 1)
        throw InvalidModelError("simulation needs at least one vertex");
    if (n > kSimulatorCap)
        throw SizeLimitError("statevector over " + std::to_string(n) +
                             " qubits exceeds cap " +
                             std::to_string(kSimulatorCap));
    order = model.vertices();
    dim = std::size_t{1} << n;
    offset = model.offset();

    std::map<int, int> pos;
    for (int p = 0; p < n; ++p) pos[order[p]] = p;
    for (const auto& [key, j] : model.couplings()) {
        pair_positions.push_back({pos.at(key.first), pos.at(key.second)});
        pair_couplings.push_back(j);
    }

    diag.assign(dim, 0.0);
    parallel_for(dim, [&](std::size_t begin, std::size_t end) {
        for (std::size_t b = begin; b < end; ++b) {
            double e = 0.0;
            for (std::size_t c = 0; c < pair_couplings.size(); ++c) {
                const auto [pi, pj] = pair_positions[c];
                const bool cut = ((b >> pi) ^ (b >> pj)) & 1u;
                e += cut ? -pair_couplings[c] : pair_couplings[c];
            }
            diag[b] = e;
        }
    });
}

void apply_phase_inplace(const std::vector<double>& diag, double gamma,
                         std::vector<std::complex<double>>& amps) {
    parallel_for(amps.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t b = begin; b < end; ++b) {
            const double phi = gamma * diag[b];
            amps[b] *= std::complex<double>(std::cos(phi), -std::sin(phi));
        }
    });
}

void apply_mixer_inplace(int num_qubits, double beta,
                         std::vector<std::complex<double>>& amps) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    for (int q = 0; q < num_qubits; ++q) {
        const std::size_t mask = std::size_t{1} << q;
        parallel_for(amps.size(), [&](std::size_t begin, std::size_t end) {
            for (std::size_t b = begin; b < end; ++b) {
                if (b & mask) continue;
                const auto a0 = amps[b];
                const auto a1 = amps[b | mask];
                amps[b] = {c * a0.real() + s * a1.imag(),
                           c * a0.imag() - s * a1.real()};
                amps[b | mask] = {s * a0.imag() + c * a1.real(),
                                  -s * a0.real() + c * a1.imag()};
            }
        });
    }
}

void SimContext::run_schedule(const ParameterSchedule& schedule,
                              std::vector<std::complex<double>>& amps) const {
    check_schedule(schedule);
    const double amp0 = 1.0 / std::sqrt(static_cast<double>(dim));
    amps.assign(dim, amp0);
    for (int k = 0; k < schedule.level; ++k) {
        apply_phase_inplace(diag, schedule.gammas[k], amps);
        apply_mixer_inplace(static_cast<int>(order.size()), schedule.betas[k],
                            amps);
    }
}

double SimContext::expectation(
    const std::vector<std::complex<double>>& amps) const {
    return offset + parallel_sum(dim, [&](std::size_t begin, std::size_t end) {
               double acc = 0.0;
               for (std::size_t b = begin; b < end; ++b)
                   acc += std::norm(amps[b]) * diag[b];
               return acc;
           });
}

double correlation_at(const std::vector<std::complex<double>>& amps, int pos_i,
                      int pos_j) {
    return parallel_sum(amps.size(), [&](std::size_t begin, std::size_t end) {
        double acc = 0.0;
        for (std::size_t b = begin; b < end; ++b) {
            const bool cut = ((b >> pos_i) ^ (b >> pos_j)) & 1u;
            acc += cut ? -std::norm(amps[b]) : std::norm(amps[b]);
        }
        return acc;
    });
}

void check_schedule(const ParameterSchedule& schedule) {
    if (schedule.level < 1)
        throw DomainError("schedule level must be >= 1");
    if (static_cast<int>(schedule.gammas.size()) != schedule.level ||
        static_cast<int>(schedule.betas.size()) != schedule.level)
        throw DomainError("schedule needs exactly `level` gammas and betas");
}

}  // namespace detail

namespace {

void check_registration(const Statevector& state, const IsingModel& model) {
    std::vector<int> registered = state.qubit_order;
    std::sort(registered.begin(), registered.end());
    if (registered != model.vertices())
        throw RegistrationError(
            "state register does not match the model's vertex set");
    if (state.amplitudes.size() !=
        (std::size_t{1} << state.qubit_order.size()))
        throw RegistrationError("amplitude count is not 2^n");
}

std::vector<double> build_diagonal(const IsingModel& model,
                                   const Statevector& state) {
    std::map<int, int> pos;
    for (int p = 0; p < state.num_qubits(); ++p) pos[state.qubit_order[p]] = p;
    std::vector<double> diag(state.amplitudes.size(), 0.0);
    for (const auto& [key, j] : model.couplings()) {
        const int pi = pos.at(key.first);
        const int pj = pos.at(key.second);
        const double jj = j;
        detail::parallel_for(diag.size(), [&](std::size_t begin,
                                              std::size_t end) {
            for (std::size_t b = begin; b < end; ++b) {
                const bool cut = ((b >> pi) ^ (b >> pj)) & 1u;
                diag[b] += cut ? -jj : jj;
            }
        });
    }
    return diag;
}

}  // namespace

double Statevector::norm() const {
    const double sq =
        detail::parallel_sum(amplitudes.size(), [&](std::size_t begin,
                                                    std::size_t end) {
            double acc = 0.0;
            for (std::size_t b = begin; b < end; ++b)
                acc += std::norm(amplitudes[b]);
            return acc;
        });
    return std::sqrt(sq);
}

Statevector plus_state(int n) {
    std::vector<int> vertices(n);
    for (int i = 0; i < n; ++i) vertices[i] = i;
    return plus_state(vertices);
}

Statevector plus_state(const std::vector<int>& vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 1) throw SizeLimitError("plus state needs at least one qubit");
    if (n > kSimulatorCap)
        throw SizeLimitError("statevector over " + std::to_string(n) +
                             " qubits exceeds cap " +
                             std::to_string(kSimulatorCap));
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw RegistrationError("register has a duplicate vertex id");
    Statevector state;
    state.qubit_order = vertices;
    state.amplitudes.assign(std::size_t{1} << n,
                            1.0 / std::sqrt(std::pow(2.0, n)));
    return state;
}

Statevector apply_phase_layer(const Statevector& state, const IsingModel& model,
                              double gamma) {
    check_registration(state, model);
    Statevector out = state;
    const auto diag = build_diagonal(model, state);
    detail::apply_phase_inplace(diag, gamma, out.amplitudes);
    return out;
}

Statevector apply_mixer_layer(const Statevector& state, double beta) {
    Statevector out = state;
    detail::apply_mixer_inplace(state.num_qubits(), beta, out.amplitudes);
    return out;
}

Statevector qaoa_state(const IsingModel& model,
                       const ParameterSchedule& schedule) {
    detail::check_schedule(schedule);
    detail::SimContext ctx(model);
    Statevector state;
    state.qubit_order = ctx.order;
    ctx.run_schedule(schedule, state.amplitudes);
    return state;
}

double expectation_energy(const Statevector& state, const IsingModel& model) {
    check_registration(state, model);
    const auto diag = build_diagonal(model, state);
    return model.offset() +
           detail::parallel_sum(
               state.amplitudes.size(),
               [&](std::size_t begin, std::size_t end) {
                   double acc = 0.0;
                   for (std::size_t b = begin; b < end; ++b)
                       acc += std::norm(state.amplitudes[b]) * diag[b];
                   return acc;
               });
}

double correlation(const Statevector& state, int i, int j) {
    if (i == j)
        throw RegistrationError("correlation needs two distinct vertices");
    const auto& order = state.qubit_order;
    auto it_i = std::find(order.begin(), order.end(), i);
    auto it_j = std::find(order.begin(), order.end(), j);
    if (it_i == order.end() || it_j == order.end())
        throw RegistrationError("correlation vertex is not registered");
    return detail::correlation_at(state.amplitudes,
                                  static_cast<int>(it_i - order.begin()),
                                  static_cast<int>(it_j - order.begin()));
}

}  // namespace qaoa
