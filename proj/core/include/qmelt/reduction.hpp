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
 * Checks whether an entangler collapses to a shorter equivalent circuit.
 *
 * Two reductions are known: the full entangler against the linear chain run
 * bottom-up, and the distance-four ring against a fan-out in which every
 * qubit talks only to the bottom wire. The first is an exact unitary
 * identity; the second holds up to a relabeling of the output wires. The
 * gate order inside an entangler matters, so each claim is tested for every
 * ordering the entangler supports.
 */

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qmelt/circuit_model.hpp"

namespace qmelt {

enum class ReductionTarget {
    InverseLinear, ///< linear pairs (i, i+1) applied from the bottom up
    BottomFanout,  ///< CX(width-1, j) for j = 0 .. width-2
};

std::string to_string(ReductionTarget target);

Circuit reduction_candidate(ReductionTarget target, std::size_t width, EntanglingGate gate);

/// The reduction claimed for `kind`; InvalidArgument for kinds without one.
ReductionTarget claimed_reduction(EntanglerKind kind);

/// Wire relabelings are only searched up to this width (width! candidates).
inline constexpr std::size_t kMaxPermutationSearchWidth = 7;

struct OrderingCheck {
    EntanglerOrdering ordering{EntanglerOrdering::Canonical};
    std::size_t gate_count{0};
    bool exact{false};              ///< equal up to a global phase
    double exact_deviation{0.0};
    bool permutation_checked{false};
    std::optional<std::vector<std::size_t>> permutation;  ///< set when a relabeling matches
    bool satisfies_claim{false};
};

struct ReductionReport {
    EntanglerKind kind{EntanglerKind::Full};
    std::size_t width{5};
    EntanglingGate gate{EntanglingGate::CX};
    ReductionTarget target{ReductionTarget::InverseLinear};
    std::size_t candidate_gate_count{0};
    std::vector<OrderingCheck> checks;

    [[nodiscard]] bool confirmed() const;
    /// First ordering (in available_orderings order) that satisfies the claim.
    [[nodiscard]] std::optional<EntanglerOrdering> satisfying_ordering() const;
};

ReductionReport check_reduction(EntanglerKind kind, std::size_t width, EntanglingGate gate);

/// One row per ordering. Throws IoError when the file cannot be written.
void write_reduction_table(const ReductionReport &report, const std::filesystem::path &path);

} // namespace qmelt
