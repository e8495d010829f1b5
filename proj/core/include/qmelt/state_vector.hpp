// Copyright 2026 The qmelt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense state-vector simulator for registers of up to 14 qubits.
 *
 * Gates are applied in place with stride arithmetic; full matrices are only
 * built by circuit_unitary().
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qmelt/circuit.hpp"

namespace qmelt {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 14;
inline constexpr std::size_t kMaxUnitaryQubits = 10;

/// Normalized amplitudes of an n-qubit register. Qubit 0 is the MSB.
class StateVector {
  public:
    /// |0...0> on `n_qubits` qubits; throws InvalidArgument outside 1..14.
    static StateVector zero(std::size_t n_qubits);

    /// Basis state |index>.
    static StateVector basis(std::size_t n_qubits, std::size_t index);

    /// Takes ownership of raw amplitudes; the caller guarantees normalization.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }

    void apply(const Gate &gate);

    /// Runs every gate of a concrete circuit.
    void run(const Circuit &circuit);

    /// Runs a circuit, taking slot angles from `params` instead of the gates.
    void run(const Circuit &circuit, std::span<const double> params);

    [[nodiscard]] double norm_squared() const;

  private:
    StateVector(std::size_t n_qubits, std::vector<Complex> amps)
        : n_qubits_{n_qubits}, amps_{std::move(amps)} {}

    void apply_ry(std::size_t qubit, double angle);
    void apply_cx(std::size_t control, std::size_t target);
    void apply_cz(std::size_t control, std::size_t target);
    void check_gate(const Gate &gate) const;

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

/// Single-qubit reduced density matrix.
using DensityMatrix1Q = Eigen::Matrix2cd;

StateVector zero_state(std::size_t n_qubits);

StateVector apply_gate(StateVector state, const Gate &gate);

/// <Z> on `qubit`: sum of |a_i|^2 with sign + when the qubit's bit is 0.
double expectation_z(const StateVector &state, std::size_t qubit);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Partial trace over every qubit except `qubit`. Requires n_qubits >= 2.
DensityMatrix1Q reduced_density_matrix(const StateVector &state,
                                       std::size_t qubit);

/// Von Neumann entropy in bits, with 0 log 0 = 0. Validates the input is a
/// density matrix (Hermitian, unit trace) to 1e-10.
double entropy_log2(const DensityMatrix1Q &rho);

/// Mean over qubits of entropy_log2(reduced_density_matrix(state, q)).
double mean_qubit_entropy(const StateVector &state);

/// Full 2^n x 2^n unitary; column j is the circuit applied to |j>.
/// Throws ResourceLimit above kMaxUnitaryQubits.
Eigen::MatrixXcd circuit_unitary(const Circuit &circuit);

} // namespace qmelt
