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

#include "qmelt/reduction.hpp"

#include <fstream>

#include "qmelt/error.hpp"
#include "qmelt/number_format.hpp"
#include "qmelt/state_vector.hpp"

namespace qmelt {

std::string to_string(ReductionTarget target) {
    return target == ReductionTarget::InverseLinear ? "inverse-linear" : "bottom-fanout";
}

Circuit reduction_candidate(ReductionTarget target, std::size_t width, EntanglingGate gate) {
    if (width < 2) {
        throw InvalidArgument("reduction candidates need width >= 2");
    }
    if (target == ReductionTarget::InverseLinear) {
        return build_entangler(EntanglerKind::Linear, width, gate, EntanglerOrdering::Reversed);
    }
    Circuit circuit(width);
    const std::size_t bottom = width - 1;
    for (std::size_t j = 0; j < bottom; ++j) {
        circuit.add(gate == EntanglingGate::CX ? Gate::cx(bottom, j) : Gate::cz(bottom, j));
    }
    return circuit;
}

ReductionTarget claimed_reduction(EntanglerKind kind) {
    switch (kind) {
    case EntanglerKind::Full:
        return ReductionTarget::InverseLinear;
    case EntanglerKind::Circular4:
        return ReductionTarget::BottomFanout;
    default:
        throw InvalidArgument("no reduction is claimed for the " + to_string(kind) +
                              " entangler (use full or circular4)");
    }
}

bool ReductionReport::confirmed() const { return satisfying_ordering().has_value(); }

std::optional<EntanglerOrdering> ReductionReport::satisfying_ordering() const {
    for (const auto &c : checks) {
        if (c.satisfies_claim) {
            return c.ordering;
        }
    }
    return std::nullopt;
}

ReductionReport check_reduction(EntanglerKind kind, std::size_t width, EntanglingGate gate) {
    if (width > kMaxUnitaryQubits) {
        throw ResourceLimit("reduction checks build full unitaries; width " +
                            std::to_string(width) + " exceeds " +
                            std::to_string(kMaxUnitaryQubits));
    }
    ReductionReport report;
    report.kind = kind;
    report.width = width;
    report.gate = gate;
    report.target = claimed_reduction(kind);
    const Circuit candidate = reduction_candidate(report.target, width, gate);
    report.candidate_gate_count = candidate.gates().size();

    for (const EntanglerOrdering ordering : available_orderings(kind)) {
        const Circuit entangler = build_entangler(kind, width, gate, ordering);
        OrderingCheck check;
        check.ordering = ordering;
        check.gate_count = entangler.gates().size();
        const auto exact = unitary_equivalent(entangler, candidate, true);
        check.exact = exact.equivalent;
        check.exact_deviation = exact.max_deviation;
        if (report.target == ReductionTarget::BottomFanout &&
            width <= kMaxPermutationSearchWidth) {
            check.permutation_checked = true;
            if (auto match = equivalent_up_to_wire_permutation(entangler, candidate)) {
                check.permutation = std::move(match->permutation);
            }
        }
        check.satisfies_claim = report.target == ReductionTarget::InverseLinear
                                    ? check.exact
                                    : check.exact || check.permutation.has_value();
        report.checks.push_back(std::move(check));
    }
    return report;
}

void write_reduction_table(const ReductionReport &report, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    out << "entangler,width,gate,ordering,gates,candidate,candidate_gates,exact,"
           "exact_deviation,permutation_checked,permutation,satisfies_claim\n";
    for (const auto &c : report.checks) {
        std::string perm;
        if (c.permutation) {
            for (std::size_t i = 0; i < c.permutation->size(); ++i) {
                perm += (i ? " " : "") + std::to_string((*c.permutation)[i]);
            }
        }
        out << to_string(report.kind) << ',' << report.width << ',' << to_string(report.gate)
            << ',' << to_string(c.ordering) << ',' << c.gate_count << ','
            << to_string(report.target) << ',' << report.candidate_gate_count << ','
            << (c.exact ? "true" : "false") << ',' << format_double(c.exact_deviation) << ','
            << (c.permutation_checked ? "true" : "false") << ',' << perm << ','
            << (c.satisfies_claim ? "true" : "false") << '\n';
    }
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

} // namespace qmelt
