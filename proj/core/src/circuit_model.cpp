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

#include "qmelt/circuit_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "qmelt/error.hpp"
#include "qmelt/state_vector.hpp"

namespace qmelt {

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::size_t ring_distance_count(EntanglerKind kind) {
    return kind == EntanglerKind::Circular2 ? 2 : 4;
}

bool is_circular_k(EntanglerKind kind) {
    return kind == EntanglerKind::Circular2 || kind == EntanglerKind::Circular4;
}

} // namespace

std::string to_string(EntanglerKind kind) {
    switch (kind) {
    case EntanglerKind::Linear:
        return "linear";
    case EntanglerKind::Circular:
        return "circular";
    case EntanglerKind::Circular2:
        return "circular2";
    case EntanglerKind::Circular4:
        return "circular4";
    case EntanglerKind::Full:
        return "full";
    }
    return "?";
}

std::string to_string(EntanglingGate gate) { return gate == EntanglingGate::CX ? "cx" : "cz"; }

std::string to_string(EntanglerOrdering ordering) {
    switch (ordering) {
    case EntanglerOrdering::Canonical:
        return "canonical";
    case EntanglerOrdering::Reversed:
        return "reversed";
    case EntanglerOrdering::DescendingDistance:
        return "descending-distance";
    case EntanglerOrdering::ReversedRing:
        return "reversed-ring";
    case EntanglerOrdering::QubitMajor:
        return "qubit-major";
    }
    return "?";
}

std::string to_string(EncoderLayout layout) {
    switch (layout) {
    case EncoderLayout::FiveX:
        return "5x";
    case EncoderLayout::TenXX:
        return "10xx";
    case EncoderLayout::TenXX2:
        return "10xx2";
    }
    return "?";
}

std::string to_string(AngleMap map) { return map == AngleMap::PiX ? "pix" : "arctan"; }

EntanglerKind parse_entangler_kind(std::string_view text) {
    const std::string key = lower(text);
    for (const auto kind : {EntanglerKind::Linear, EntanglerKind::Circular,
                            EntanglerKind::Circular2, EntanglerKind::Circular4,
                            EntanglerKind::Full}) {
        if (key == to_string(kind)) {
            return kind;
        }
    }
    throw InvalidArgument("unknown entangler '" + std::string(text) + "'");
}

EntanglingGate parse_entangling_gate(std::string_view text) {
    const std::string key = lower(text);
    if (key == "cx" || key == "cnot") {
        return EntanglingGate::CX;
    }
    if (key == "cz") {
        return EntanglingGate::CZ;
    }
    throw InvalidArgument("unknown two-qubit gate '" + std::string(text) + "'");
}

EncoderLayout parse_encoder_layout(std::string_view text) {
    const std::string key = lower(text);
    for (const auto layout : {EncoderLayout::FiveX, EncoderLayout::TenXX, EncoderLayout::TenXX2}) {
        if (key == to_string(layout)) {
            return layout;
        }
    }
    throw InvalidArgument("unknown encoder layout '" + std::string(text) + "'");
}

AngleMap parse_angle_map(std::string_view text) {
    const std::string key = lower(text);
    if (key == "pix") {
        return AngleMap::PiX;
    }
    if (key == "arctan") {
        return AngleMap::ArctanShift;
    }
    throw InvalidArgument("unknown angle map '" + std::string(text) + "'");
}

std::size_t min_width(EntanglerKind kind) {
    switch (kind) {
    case EntanglerKind::Circular2:
        return 3;
    case EntanglerKind::Circular4:
        return 5;
    default:
        return 2;
    }
}

std::vector<EntanglerOrdering> available_orderings(EntanglerKind kind) {
    if (is_circular_k(kind)) {
        return {EntanglerOrdering::Canonical, EntanglerOrdering::Reversed,
                EntanglerOrdering::DescendingDistance, EntanglerOrdering::ReversedRing,
                EntanglerOrdering::QubitMajor};
    }
    return {EntanglerOrdering::Canonical, EntanglerOrdering::Reversed};
}

std::vector<QubitPair> entangler_pairs(EntanglerKind kind, std::size_t width,
                                       EntanglerOrdering ordering) {
    if (width < min_width(kind)) {
        throw InvalidArgument(to_string(kind) + " entangler needs width >= " +
                              std::to_string(min_width(kind)) + ", got " +
                              std::to_string(width));
    }
    const auto orderings = available_orderings(kind);
    if (std::find(orderings.begin(), orderings.end(), ordering) == orderings.end()) {
        throw InvalidArgument("ordering " + to_string(ordering) + " does not apply to " +
                              to_string(kind));
    }

    std::vector<QubitPair> pairs;
    switch (kind) {
    case EntanglerKind::Linear:
        for (std::size_t i = 0; i + 1 < width; ++i) {
            pairs.emplace_back(i, i + 1);
        }
        break;
    case EntanglerKind::Circular:
        for (std::size_t i = 0; i + 1 < width; ++i) {
            pairs.emplace_back(i, i + 1);
        }
        pairs.emplace_back(width - 1, 0);
        break;
    case EntanglerKind::Full:
        for (std::size_t i = 0; i < width; ++i) {
            for (std::size_t j = i + 1; j < width; ++j) {
                pairs.emplace_back(i, j);
            }
        }
        break;
    case EntanglerKind::Circular2:
    case EntanglerKind::Circular4: {
        const std::size_t max_k = ring_distance_count(kind);
        const bool descending_k = ordering == EntanglerOrdering::DescendingDistance;
        const bool reversed_ring = ordering == EntanglerOrdering::ReversedRing;
        if (ordering == EntanglerOrdering::QubitMajor) {
            for (std::size_t i = 0; i < width; ++i) {
                for (std::size_t k = 1; k <= max_k; ++k) {
                    pairs.emplace_back(i, (i + k) % width);
                }
            }
            return pairs;
        }
        for (std::size_t kk = 1; kk <= max_k; ++kk) {
            const std::size_t k = descending_k ? max_k + 1 - kk : kk;
            for (std::size_t ii = 0; ii < width; ++ii) {
                const std::size_t i = reversed_ring ? width - 1 - ii : ii;
                pairs.emplace_back(i, (i + k) % width);
            }
        }
        break;
    }
    }
    if (ordering == EntanglerOrdering::Reversed) {
        std::reverse(pairs.begin(), pairs.end());
    }
    return pairs;
}

Circuit build_entangler(EntanglerKind kind, std::size_t width, EntanglingGate gate,
                        EntanglerOrdering ordering) {
    Circuit circuit(width);
    for (const auto &[control, target] : entangler_pairs(kind, width, ordering)) {
        circuit.add(gate == EntanglingGate::CX ? Gate::cx(control, target)
                                               : Gate::cz(control, target));
    }
    return circuit;
}

void AnsatzSpec::validate() const {
    if (width < 2 || width > 12) {
        throw InvalidArgument("ansatz width must be in 2..12, got " + std::to_string(width));
    }
    if (width < min_width(entangler)) {
        throw InvalidArgument(to_string(entangler) + " entangler needs width >= " +
                              std::to_string(min_width(entangler)));
    }
}

std::string AnsatzSpec::label() const {
    return to_string(entangler) + "-" + to_string(gate) + "-w" + std::to_string(width) +
           "-d" + std::to_string(depth);
}

std::size_t qubit_count(EncoderLayout layout) {
    return layout == EncoderLayout::FiveX ? 5 : 10;
}

std::size_t EncoderSpec::n_qubits() const { return qubit_count(layout); }

Circuit build_ansatz(const AnsatzSpec &spec) {
    spec.validate();
    const Circuit entangler = build_entangler(spec.entangler, spec.width, spec.gate);
    Circuit circuit(spec.width);
    for (std::size_t block = 0; block < spec.depth; ++block) {
        for (std::size_t q = 0; q < spec.width; ++q) {
            circuit.add_parametrized_ry(q);
        }
        circuit.append(entangler);
    }
    return circuit;
}

Circuit build_encoder(const EncoderSpec &spec, std::span<const double> angles) {
    const std::size_t n = spec.n_qubits();
    if (angles.size() != n) {
        throw InvalidArgument(to_string(spec.layout) + " encoder expects " +
                              std::to_string(n) + " angles, got " +
                              std::to_string(angles.size()));
    }
    Circuit circuit(n);
    for (std::size_t q = 0; q < n; ++q) {
        circuit.add(Gate::ry(q, angles[q]));
    }
    return circuit;
}

Circuit bind_parameters(Circuit circuit, std::span<const double> params) {
    circuit.bind(params);
    return circuit;
}

namespace {

void check_comparable(const Circuit &a, const Circuit &b) {
    if (!a.is_concrete() || !b.is_concrete()) {
        throw InvalidArgument("equivalence check requires concrete circuits");
    }
    if (a.n_qubits() != b.n_qubits()) {
        throw InvalidArgument("equivalence check requires equal widths");
    }
}

} // namespace

EquivalenceResult unitary_equivalent(const Circuit &a, const Circuit &b,
                                     bool up_to_global_phase) {
    check_comparable(a, b);
    const Eigen::MatrixXcd ua = circuit_unitary(a);
    Eigen::MatrixXcd ub = circuit_unitary(b);
    if (up_to_global_phase) {
        const Complex overlap = (ub.adjoint() * ua).trace();
        if (std::abs(overlap) > 0.0) {
            ub *= overlap / std::abs(overlap);
        }
    }
    const double deviation = (ua - ub).cwiseAbs().maxCoeff();
    return {deviation <= kEquivalenceTolerance, deviation};
}

std::optional<PermutationMatch> equivalent_up_to_wire_permutation(const Circuit &a,
                                                                  const Circuit &b) {
    check_comparable(a, b);
    const std::size_t n = a.n_qubits();
    const Eigen::MatrixXcd ua = circuit_unitary(a);
    const Eigen::MatrixXcd ub = circuit_unitary(b);
    const auto dim = ua.rows();

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<Eigen::Index> row_map(static_cast<std::size_t>(dim));
    do {
        for (Eigen::Index r = 0; r < dim; ++r) {
            Eigen::Index mapped = 0;
            for (std::size_t q = 0; q < n; ++q) {
                const auto bit = (static_cast<std::size_t>(r) >> (n - 1 - q)) & 1U;
                mapped |= static_cast<Eigen::Index>(bit << (n - 1 - perm[q]));
            }
            row_map[static_cast<std::size_t>(r)] = mapped;
        }
        double deviation = 0.0;
        for (Eigen::Index c = 0; c < dim && deviation <= kEquivalenceTolerance; ++c) {
            for (Eigen::Index r = 0; r < dim; ++r) {
                deviation = std::max(
                    deviation, std::abs(ua(row_map[static_cast<std::size_t>(r)], c) - ub(r, c)));
            }
        }
        if (deviation <= kEquivalenceTolerance) {
            return PermutationMatch{perm, deviation};
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace qmelt
