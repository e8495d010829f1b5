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
 * Declarative encoder and ansatz specifications, entangler topologies and
 * unitary-equivalence checks.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmelt/circuit.hpp"

namespace qmelt {

enum class EntanglerKind { Linear, Circular, Circular2, Circular4, Full };

/// Two-qubit gate used by an entangler.
enum class EntanglingGate { CX, CZ };

/**
 * Order in which an entangler's pairs are emitted.
 *
 * Canonical is what build_ansatz uses. The others exist so that reduction
 * claims which depend on gate order can be checked against each plausible
 * reading of a circuit diagram.
 */
enum class EntanglerOrdering {
    Canonical,          ///< Linear/Circular ascending; CircularK distance-major; Full lexicographic
    Reversed,           ///< canonical list reversed
    DescendingDistance, ///< CircularK: distance K first, ring ascending
    ReversedRing,       ///< CircularK: distance ascending, ring descending
    QubitMajor,         ///< CircularK: for each qubit, distances 1..K
};

enum class EncoderLayout { FiveX, TenXX, TenXX2 };

enum class AngleMap { PiX, ArctanShift };

std::string to_string(EntanglerKind kind);
std::string to_string(EntanglingGate gate);
std::string to_string(EntanglerOrdering ordering);
std::string to_string(EncoderLayout layout);
std::string to_string(AngleMap map);

EntanglerKind parse_entangler_kind(std::string_view text);
EntanglingGate parse_entangling_gate(std::string_view text);
EncoderLayout parse_encoder_layout(std::string_view text);
AngleMap parse_angle_map(std::string_view text);

/// Smallest register width on which `kind` is defined.
std::size_t min_width(EntanglerKind kind);

/// Orderings that produce distinct pair lists for `kind`.
std::vector<EntanglerOrdering> available_orderings(EntanglerKind kind);

using QubitPair = std::pair<std::size_t, std::size_t>;  // (control, target)

/// Pairs of one entangler layer. Throws InvalidArgument when `width` is too
/// small for `kind` or the ordering does not apply to it.
std::vector<QubitPair>
entangler_pairs(EntanglerKind kind, std::size_t width,
                EntanglerOrdering ordering = EntanglerOrdering::Canonical);

/// Concrete circuit holding only the entangler layer.
Circuit build_entangler(EntanglerKind kind, std::size_t width, EntanglingGate gate,
                        EntanglerOrdering ordering = EntanglerOrdering::Canonical);

struct AnsatzSpec {
    std::size_t width{5};
    std::size_t depth{1};
    EntanglerKind entangler{EntanglerKind::Linear};
    EntanglingGate gate{EntanglingGate::CX};

    [[nodiscard]] std::size_t parameter_count() const { return width * depth; }

    /// Throws InvalidArgument unless 2 <= width <= 12 and the entangler fits.
    void validate() const;

    /// Short stable label such as "linear-cx-w5-d3".
    [[nodiscard]] std::string label() const;

    friend bool operator==(const AnsatzSpec &, const AnsatzSpec &) = default;
};

struct EncoderSpec {
    EncoderLayout layout{EncoderLayout::FiveX};
    AngleMap angle_map{AngleMap::ArctanShift};

    [[nodiscard]] std::size_t n_qubits() const;

    friend bool operator==(const EncoderSpec &, const EncoderSpec &) = default;
};

std::size_t qubit_count(EncoderLayout layout);

/// `depth` blocks of [one symbolic Ry per qubit, then the entangler layer].
/// Slots are ordered (block, qubit).
Circuit build_ansatz(const AnsatzSpec &spec);

/// One concrete Ry per qubit; angles[q] goes on qubit q.
Circuit build_encoder(const EncoderSpec &spec, std::span<const double> angles);

/// Copy of `circuit` with slot angles set to `params`.
Circuit bind_parameters(Circuit circuit, std::span<const double> params);

struct EquivalenceResult {
    bool equivalent{false};
    double max_deviation{0.0};
};

inline constexpr double kEquivalenceTolerance = 1e-9;

/// Compares full unitaries elementwise; with `up_to_global_phase` the phase
/// of `b` is first aligned to `a` by arg(tr(B^dagger A)).
EquivalenceResult unitary_equivalent(const Circuit &a, const Circuit &b,
                                     bool up_to_global_phase);

struct PermutationMatch {
    /// Output wire q of `b` is relabeled as wire permutation[q].
    std::vector<std::size_t> permutation;
    double max_deviation{0.0};
};

/// Searches all relabelings of b's output wires for one that makes the
/// unitaries equal (exact phase). Returns the first match in lexicographic
/// permutation order, or nullopt.
std::optional<PermutationMatch>
equivalent_up_to_wire_permutation(const Circuit &a, const Circuit &b);

} // namespace qmelt
