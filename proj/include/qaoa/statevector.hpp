#pragma once

#include <complex>
#include <vector>

#include "qaoa/ising.hpp"

namespace qaoa {

// Dense amplitudes over 2^n basis states.
inline constexpr int kSimulatorCap = 24;

// Basis convention: register position p is bit p of the amplitude index,
// bit 0 means spin +1 and bit 1 means spin -1.
struct Statevector {
    std::vector<std::complex<double>> amplitudes;
    std::vector<int> qubit_order;  // register position -> model vertex id

    int num_qubits() const { return static_cast<int>(qubit_order.size()); }
    double norm() const;
};

struct ParameterSchedule {
    int level = 1;
    std::vector<double> gammas;
    std::vector<double> betas;

    bool operator==(const ParameterSchedule&) const = default;
};

// |+>^n over register vertices 0..n-1, or over an explicit vertex list.
Statevector plus_state(int n);
Statevector plus_state(const std::vector<int>& vertices);

// Diagonal phase e^{-i gamma E_J(x)} with E_J(x) = sum J_ij x_i x_j.
// The offset is excluded: it only contributes a global phase.
Statevector apply_phase_layer(const Statevector& state, const IsingModel& model,
                              double gamma);

// e^{-i beta X} on every qubit.
Statevector apply_mixer_layer(const Statevector& state, double beta);

// Alternates phase(gamma_k), mixer(beta_k) for k = 1..p on |+>^n.
Statevector qaoa_state(const IsingModel& model,
                       const ParameterSchedule& schedule);

// offset + sum_ij J_ij <Z_i Z_j>.
double expectation_energy(const Statevector& state, const IsingModel& model);

// <Z_i Z_j> = sum_x |amp(x)|^2 x_i x_j, in [-1, 1].
double correlation(const Statevector& state, int i, int j);

}  // namespace qaoa
