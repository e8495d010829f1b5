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

#include "qmelt/circuit.hpp"

#include <algorithm>
#include <string>

#include "qmelt/error.hpp"

namespace qmelt {

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::Ry:
        return "Ry";
    case GateKind::CX:
        return "CX";
    case GateKind::CZ:
        return "CZ";
    }
    return "?";
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_{n_qubits} {
    if (n_qubits == 0) {
        throw InvalidArgument("circuit needs at least one qubit");
    }
}

std::optional<std::size_t> Circuit::slot_of_gate(std::size_t gate_index) const {
    if (gate_index >= slot_of_gate_.size() || slot_of_gate_[gate_index] < 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(slot_of_gate_[gate_index]);
}

void Circuit::check_gate(const Gate &gate) const {
    if (gate.target >= n_qubits_) {
        throw InvalidArgument("gate target " + std::to_string(gate.target) +
                              " out of range for " + std::to_string(n_qubits_) +
                              "-qubit circuit");
    }
    if (gate.is_two_qubit()) {
        if (gate.control >= n_qubits_) {
            throw InvalidArgument("gate control " + std::to_string(gate.control) +
                                  " out of range for " +
                                  std::to_string(n_qubits_) + "-qubit circuit");
        }
        if (gate.control == gate.target) {
            throw InvalidArgument("control and target must differ");
        }
    }
}

void Circuit::add(const Gate &gate) {
    check_gate(gate);
    gates_.push_back(gate);
    slot_of_gate_.push_back(-1);
}

void Circuit::add_parametrized_ry(std::size_t qubit) {
    const Gate gate = Gate::ry(qubit, 0.0);
    check_gate(gate);
    slot_of_gate_.push_back(static_cast<std::ptrdiff_t>(slots_.size()));
    slots_.push_back(gates_.size());
    gates_.push_back(gate);
    bound_ = false;
}

void Circuit::append(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw InvalidArgument("cannot append circuits of different width");
    }
    const bool was_concrete = is_concrete();
    const std::size_t offset = gates_.size();
    const auto slot_offset = static_cast<std::ptrdiff_t>(slots_.size());
    for (std::size_t i = 0; i < other.gates_.size(); ++i) {
        gates_.push_back(other.gates_[i]);
        const std::ptrdiff_t s = other.slot_of_gate_[i];
        slot_of_gate_.push_back(s < 0 ? -1 : s + slot_offset);
    }
    for (const std::size_t s : other.slots_) {
        slots_.push_back(s + offset);
    }
    bound_ = was_concrete && other.is_concrete();
}

void Circuit::bind(std::span<const double> params) {
    if (params.size() != slots_.size()) {
        throw InvalidArgument("expected " + std::to_string(slots_.size()) +
                              " parameters, got " + std::to_string(params.size()));
    }
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        gates_[slots_[k]].angle = params[k];
    }
    bound_ = !slots_.empty();
}

std::size_t Circuit::two_qubit_gate_count() const {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [](const Gate &g) { return g.is_two_qubit(); }));
}

} // namespace qmelt
