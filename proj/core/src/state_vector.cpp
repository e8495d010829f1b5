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

#include "qmelt/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qmelt/error.hpp"

namespace qmelt {

namespace {

constexpr double kDensityTolerance = 1e-10;

std::size_t bit_of(std::size_t n_qubits, std::size_t qubit) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

void check_qubit(std::size_t n_qubits, std::size_t qubit) {
    if (qubit >= n_qubits) {
        throw InvalidArgument("qubit " + std::to_string(qubit) +
                              " out of range for " + std::to_string(n_qubits) +
                              "-qubit register");
    }
}

} // namespace

StateVector StateVector::zero(std::size_t n_qubits) { return basis(n_qubits, 0); }

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidArgument("register width must be in 1.." +
                              std::to_string(kMaxQubits) + ", got " +
                              std::to_string(n_qubits));
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    if (index >= amps.size()) {
        throw InvalidArgument("basis index out of range");
    }
    amps[index] = 1.0;
    return StateVector{n_qubits, std::move(amps)};
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw InvalidArgument("amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    if (n > kMaxQubits) {
        throw InvalidArgument("register too wide");
    }
    return StateVector{n, std::move(amplitudes)};
}

void StateVector::check_gate(const Gate &gate) const {
    check_qubit(n_qubits_, gate.target);
    if (gate.is_two_qubit()) {
        check_qubit(n_qubits_, gate.control);
        if (gate.control == gate.target) {
            throw InvalidArgument("control and target must differ");
        }
    }
}

void StateVector::apply(const Gate &gate) {
    check_gate(gate);
    switch (gate.kind) {
    case GateKind::Ry:
        apply_ry(gate.target, gate.angle);
        break;
    case GateKind::CX:
        apply_cx(gate.control, gate.target);
        break;
    case GateKind::CZ:
        apply_cz(gate.control, gate.target);
        break;
    }
}

void StateVector::apply_ry(std::size_t qubit, double angle) {
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    const std::size_t stride = bit_of(n_qubits_, qubit);
    const std::size_t dim = amps_.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + stride];
            amps_[i] = c * a0 - s * a1;
            amps_[i + stride] = s * a0 + c * a1;
        }
    }
}

void StateVector::apply_cx(std::size_t control, std::size_t target) {
    const std::size_t cbit = bit_of(n_qubits_, control);
    const std::size_t tbit = bit_of(n_qubits_, target);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) != 0 && (i & tbit) == 0) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void StateVector::apply_cz(std::size_t control, std::size_t target) {
    const std::size_t mask = bit_of(n_qubits_, control) | bit_of(n_qubits_, target);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::run(const Circuit &circuit) {
    if (!circuit.is_concrete()) {
        throw InvalidArgument("circuit has unbound parameter slots");
    }
    if (circuit.n_qubits() != n_qubits_) {
        throw InvalidArgument("circuit width does not match register");
    }
    for (const Gate &g : circuit.gates()) {
        apply(g);
    }
}

void StateVector::run(const Circuit &circuit, std::span<const double> params) {
    if (params.size() != circuit.parameter_count()) {
        throw InvalidArgument("expected " + std::to_string(circuit.parameter_count()) +
                              " parameters, got " + std::to_string(params.size()));
    }
    if (circuit.n_qubits() != n_qubits_) {
        throw InvalidArgument("circuit width does not match register");
    }
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (const auto slot = circuit.slot_of_gate(i)) {
            apply_ry(gates[i].target, params[*slot]);
        } else {
            apply(gates[i]);
        }
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

StateVector zero_state(std::size_t n_qubits) { return StateVector::zero(n_qubits); }

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

double expectation_z(const StateVector &state, std::size_t qubit) {
    check_qubit(state.n_qubits(), qubit);
    const std::size_t bit = bit_of(state.n_qubits(), qubit);
    double value = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        value += (i & bit) == 0 ? p : -p;
    }
    return value;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw InvalidArgument("fidelity of registers with different widths");
    }
    Complex overlap{0.0, 0.0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        overlap += std::conj(x[i]) * y[i];
    }
    return std::norm(overlap);
}

DensityMatrix1Q reduced_density_matrix(const StateVector &state, std::size_t qubit) {
    if (state.n_qubits() < 2) {
        throw InvalidArgument("reduced density matrix needs at least two qubits");
    }
    check_qubit(state.n_qubits(), qubit);
    const std::size_t bit = bit_of(state.n_qubits(), qubit);
    const auto amps = state.amplitudes();
    double p0 = 0.0;
    double p1 = 0.0;
    Complex off{0.0, 0.0};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) != 0) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | bit];
        p0 += std::norm(a0);
        p1 += std::norm(a1);
        off += a0 * std::conj(a1);
    }
    DensityMatrix1Q rho;
    rho << p0, off, std::conj(off), p1;
    return rho;
}

double entropy_log2(const DensityMatrix1Q &rho) {
    if (std::abs(rho(0, 1) - std::conj(rho(1, 0))) > kDensityTolerance ||
        std::abs(rho(0, 0).imag()) > kDensityTolerance ||
        std::abs(rho(1, 1).imag()) > kDensityTolerance) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    const double trace = rho(0, 0).real() + rho(1, 1).real();
    if (std::abs(trace - 1.0) > kDensityTolerance) {
        throw InvalidArgument("density matrix trace is " + std::to_string(trace));
    }
    // closed-form eigenvalues of a 2x2 Hermitian matrix
    const double half_gap = std::sqrt(
        0.25 * std::pow(rho(0, 0).real() - rho(1, 1).real(), 2) + std::norm(rho(0, 1)));
    const double lambdas[2] = {0.5 * trace + half_gap, 0.5 * trace - half_gap};
    double entropy = 0.0;
    for (const double lambda : lambdas) {
        if (lambda < -kDensityTolerance || lambda > 1.0 + kDensityTolerance) {
            throw InvalidArgument("density matrix eigenvalue outside [0, 1]");
        }
        if (lambda > 0.0) {
            entropy -= lambda * std::log2(lambda);
        }
    }
    return std::clamp(entropy, 0.0, 1.0);
}

double mean_qubit_entropy(const StateVector &state) {
    double total = 0.0;
    for (std::size_t q = 0; q < state.n_qubits(); ++q) {
        total += entropy_log2(reduced_density_matrix(state, q));
    }
    return total / static_cast<double>(state.n_qubits());
}

Eigen::MatrixXcd circuit_unitary(const Circuit &circuit) {
    const std::size_t n = circuit.n_qubits();
    if (n > kMaxUnitaryQubits) {
        throw ResourceLimit("circuit_unitary limited to " +
                            std::to_string(kMaxUnitaryQubits) + " qubits, got " +
                            std::to_string(n));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd unitary(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        StateVector column = StateVector::basis(n, static_cast<std::size_t>(col));
        column.run(circuit);
        const auto amps = column.amplitudes();
        for (Eigen::Index row = 0; row < dim; ++row) {
            unitary(row, col) = amps[static_cast<std::size_t>(row)];
        }
    }
    return unitary;
}

} // namespace qmelt
