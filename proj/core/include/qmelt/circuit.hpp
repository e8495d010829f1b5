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
 * Gate and Circuit value types shared by the state engine and the circuit
 * builders.
 *
 * Qubit 0 is the most significant bit of a basis-state index, i.e. the top
 * wire of a circuit diagram.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qmelt {

enum class GateKind { Ry, CX, CZ };

std::string to_string(GateKind kind);

/**
 * @brief A single gate.
 *
 * For Ry, `target` is the rotated qubit and `control` is unused. For CX/CZ
 * `control` and `target` are both meaningful.
 */
struct Gate {
    GateKind kind{GateKind::Ry};
    std::size_t control{0};
    std::size_t target{0};
    double angle{0.0};

    static Gate ry(std::size_t qubit, double angle) {
        return Gate{GateKind::Ry, 0, qubit, angle};
    }
    static Gate cx(std::size_t control, std::size_t target) {
        return Gate{GateKind::CX, control, target, 0.0};
    }
    static Gate cz(std::size_t control, std::size_t target) {
        return Gate{GateKind::CZ, control, target, 0.0};
    }

    [[nodiscard]] bool is_two_qubit() const { return kind != GateKind::Ry; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

/**
 * @brief Ordered gate list over a fixed register width.
 *
 * Some Ry gates may be marked as parameter slots. A circuit with slots is
 * symbolic until bind() assigns their angles; the slots are kept after
 * binding so the circuit can be re-bound.
 */
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }
    [[nodiscard]] const std::vector<std::size_t> &parameter_slots() const {
        return slots_;
    }
    [[nodiscard]] std::size_t parameter_count() const { return slots_.size(); }

    /// True when every gate has a concrete angle.
    [[nodiscard]] bool is_concrete() const { return slots_.empty() || bound_; }

    /// Slot index of gate `gate_index`, if it is a parameter slot.
    [[nodiscard]] std::optional<std::size_t>
    slot_of_gate(std::size_t gate_index) const;

    /// Appends a concrete gate. Throws InvalidArgument on bad qubit indices.
    void add(const Gate &gate);

    /// Appends a symbolic Ry on `qubit` and registers it as the next slot.
    void add_parametrized_ry(std::size_t qubit);

    /// Appends every gate of `other` (slots are renumbered after ours).
    void append(const Circuit &other);

    /// Assigns slot angles in slot order; throws on length mismatch.
    void bind(std::span<const double> params);

    [[nodiscard]] std::size_t two_qubit_gate_count() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    void check_gate(const Gate &gate) const;

    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    std::vector<std::size_t> slots_;
    std::vector<std::ptrdiff_t> slot_of_gate_;  // -1 for fixed gates
    bool bound_{false};
};

} // namespace qmelt
