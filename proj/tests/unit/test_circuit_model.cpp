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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "qmelt/circuit_model.hpp"
#include "qmelt/error.hpp"
#include "qmelt/features.hpp"
#include "qmelt/state_vector.hpp"

namespace qmelt {
namespace {

const std::vector<EntanglerKind> kAllKinds{EntanglerKind::Linear, EntanglerKind::Circular,
                                           EntanglerKind::Circular2, EntanglerKind::Circular4,
                                           EntanglerKind::Full};

std::size_t expected_pairs(EntanglerKind kind, std::size_t w) {
    switch (kind) {
    case EntanglerKind::Linear:
        return w - 1;
    case EntanglerKind::Circular:
        return w;
    case EntanglerKind::Circular2:
        return 2 * w;
    case EntanglerKind::Circular4:
        return 4 * w;
    case EntanglerKind::Full:
        return w * (w - 1) / 2;
    }
    return 0;
}

TEST(Entangler, CanonicalPairsForWidthFive) {
    using P = std::vector<QubitPair>;
    EXPECT_EQ(entangler_pairs(EntanglerKind::Linear, 5), (P{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    EXPECT_EQ(entangler_pairs(EntanglerKind::Circular, 5),
              (P{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    EXPECT_EQ(entangler_pairs(EntanglerKind::Full, 3), (P{{0, 1}, {0, 2}, {1, 2}}));
    const auto c2 = entangler_pairs(EntanglerKind::Circular2, 5);
    EXPECT_EQ(c2[5], (QubitPair{0, 2}));
    EXPECT_EQ(c2[9], (QubitPair{4, 1}));
}

TEST(Entangler, PairCountsForAllWidths) {
    for (const EntanglerKind kind : kAllKinds) {
        for (std::size_t w = min_width(kind); w <= 12; ++w) {
            EXPECT_EQ(entangler_pairs(kind, w).size(), expected_pairs(kind, w))
                << to_string(kind) << " w=" << w;
        }
    }
}

TEST(Entangler, WidthBelowMinimumIsRejected) {
    for (const EntanglerKind kind : kAllKinds) {
        EXPECT_THROW(entangler_pairs(kind, min_width(kind) - 1), InvalidArgument)
            << to_string(kind);
    }
}

TEST(Entangler, OrderingsAreRearrangementsOfTheSamePairs) {
    for (const EntanglerKind kind : kAllKinds) {
        auto canonical = entangler_pairs(kind, 7);
        std::sort(canonical.begin(), canonical.end());
        for (const auto ordering : available_orderings(kind)) {
            auto pairs = entangler_pairs(kind, 7, ordering);
            std::sort(pairs.begin(), pairs.end());
            EXPECT_EQ(pairs, canonical) << to_string(kind) << "/" << to_string(ordering);
        }
    }
    EXPECT_THROW(entangler_pairs(EntanglerKind::Linear, 5, EntanglerOrdering::QubitMajor),
                 InvalidArgument);
}

TEST(Entangler, Circular4UsesEveryDistanceOncePerQubit) {
    const std::size_t w = 5;
    const auto pairs = entangler_pairs(EntanglerKind::Circular4, w);
    ASSERT_EQ(pairs.size(), 4 * w);
    std::map<std::size_t, std::set<std::size_t>> distances;
    for (const auto &[c, t] : pairs) {
        const std::size_t k = (t + w - c) % w;
        EXPECT_TRUE(distances[c].insert(k).second) << "repeated distance " << k;
    }
    for (std::size_t q = 0; q < w; ++q) {
        EXPECT_EQ(distances[q], (std::set<std::size_t>{1, 2, 3, 4}));
    }
}

TEST(Entangler, ContainsNoRotations) {
    for (const EntanglerKind kind : kAllKinds) {
        for (const auto gate : {EntanglingGate::CX, EntanglingGate::CZ}) {
            const Circuit c = build_entangler(kind, 6, gate);
            EXPECT_EQ(c.parameter_count(), 0U);
            EXPECT_EQ(c.two_qubit_gate_count(), c.gates().size());
        }
    }
}

TEST(Entangler, CzVariantsAreSymmetricUnderControlTargetSwap) {
    for (const EntanglerKind kind : kAllKinds) {
        for (std::size_t w = std::max<std::size_t>(2, min_width(kind)); w <= 6; ++w) {
            const Circuit c = build_entangler(kind, w, EntanglingGate::CZ);
            Circuit swapped(w);
            for (const Gate &g : c.gates()) {
                swapped.add(Gate::cz(g.target, g.control));
            }
            EXPECT_TRUE(unitary_equivalent(c, swapped, false).equivalent) << to_string(kind);
        }
    }
}

TEST(Ansatz, ParameterCountIsWidthTimesDepth) {
    for (const std::size_t w : {5U, 10U}) {
        for (std::size_t d = 1; d <= 7; ++d) {
            for (const EntanglerKind kind : kAllKinds) {
                for (const auto gate : {EntanglingGate::CX, EntanglingGate::CZ}) {
                    const AnsatzSpec spec{w, d, kind, gate};
                    EXPECT_EQ(build_ansatz(spec).parameter_count(), w * d);
                    EXPECT_EQ(spec.parameter_count(), w * d);
                }
            }
        }
    }
}

TEST(Ansatz, LinearDepthOneLayout) {
    const Circuit c = build_ansatz({5, 1, EntanglerKind::Linear, EntanglingGate::CX});
    ASSERT_EQ(c.gates().size(), 9U);
    for (std::size_t q = 0; q < 5; ++q) {
        EXPECT_EQ(c.gates()[q].kind, GateKind::Ry);
        EXPECT_EQ(c.gates()[q].target, q);
    }
    EXPECT_EQ(c.two_qubit_gate_count(), 4U);
}

TEST(Ansatz, Validation) {
    EXPECT_THROW(build_ansatz({1, 1, EntanglerKind::Linear, EntanglingGate::CX}),
                 InvalidArgument);
    EXPECT_THROW(build_ansatz({13, 1, EntanglerKind::Linear, EntanglingGate::CX}),
                 InvalidArgument);
    EXPECT_THROW(build_ansatz({4, 1, EntanglerKind::Circular4, EntanglingGate::CX}),
                 InvalidArgument);
    EXPECT_EQ(build_ansatz({5, 0, EntanglerKind::Linear, EntanglingGate::CX}).gates().size(), 0U);
    EXPECT_EQ((AnsatzSpec{5, 3, EntanglerKind::Linear, EntanglingGate::CX}).label(),
              "linear-cx-w5-d3");
}

TEST(Encoder, FiveXBuildsOneRotationPerFeature) {
    const std::vector<double> angles{0.1, 0.2, 0.3, 0.4, 0.5};
    const Circuit c = build_encoder({EncoderLayout::FiveX, AngleMap::ArctanShift}, angles);
    ASSERT_EQ(c.n_qubits(), 5U);
    ASSERT_EQ(c.gates().size(), 5U);
    for (std::size_t q = 0; q < 5; ++q) {
        EXPECT_EQ(c.gates()[q], Gate::ry(q, angles[q]));
    }
    EXPECT_THROW(build_encoder({EncoderLayout::TenXX, AngleMap::PiX}, angles), InvalidArgument);
}

TEST(Encoder, TenQubitLayoutsInterleaveFeatures) {
    const Features x{0.1, -0.2, 0.3, -0.4, 0.5};
    const auto xx = compile_angles(EncoderLayout::TenXX, AngleMap::PiX, x);
    const auto xx2 = compile_angles(EncoderLayout::TenXX2, AngleMap::PiX, x);
    ASSERT_EQ(xx.size(), 10U);
    ASSERT_EQ(xx2.size(), 10U);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_DOUBLE_EQ(xx[2 * i], std::numbers::pi * x[i]);
        EXPECT_DOUBLE_EQ(xx[2 * i + 1], std::numbers::pi * x[i]);
        EXPECT_DOUBLE_EQ(xx2[2 * i], std::numbers::pi * x[i]);
        EXPECT_DOUBLE_EQ(xx2[2 * i + 1], std::numbers::pi * x[i] * x[i]);
    }
}

TEST(Bind, ReplacesSlotAnglesInOrder) {
    const Circuit ansatz = build_ansatz({5, 1, EntanglerKind::Linear, EntanglingGate::CX});
    const std::vector<double> zeros(5, 0.0);
    const Circuit bound = bind_parameters(ansatz, zeros);
    EXPECT_TRUE(bound.is_concrete());
    for (const Gate &g : bound.gates()) {
        if (g.kind == GateKind::Ry) {
            EXPECT_EQ(g.angle, 0.0);
        }
    }
    const std::vector<double> p{1, 2, 3, 4, 5};
    const Circuit c = bind_parameters(ansatz, p);
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        if (const auto slot = c.slot_of_gate(i)) {
            EXPECT_EQ(c.gates()[i].angle, p[*slot]);
        }
    }
    EXPECT_THROW(bind_parameters(ansatz, std::vector<double>(4)), InvalidArgument);
}

TEST(Bind, EmptySlotsLeaveCircuitUnchanged) {
    const Circuit e = build_entangler(EntanglerKind::Full, 4, EntanglingGate::CX);
    EXPECT_EQ(bind_parameters(e, {}), e);
}

TEST(Bind, RebindingIsIdempotent) {
    const Circuit ansatz = build_ansatz({5, 2, EntanglerKind::Circular, EntanglingGate::CZ});
    const std::vector<double> p{0.3, 1.1, -2.0, 0.5, 0.9, 1.7, -0.4, 2.2, 3.0, -1.5};
    const Circuit once = bind_parameters(ansatz, p);
    EXPECT_EQ(bind_parameters(once, p), once);
}

TEST(Equivalence, CircuitEqualsItself) {
    const Circuit c =
        bind_parameters(build_ansatz({4, 2, EntanglerKind::Full, EntanglingGate::CX}),
                        std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8});
    const auto r = unitary_equivalent(c, c, false);
    EXPECT_TRUE(r.equivalent);
    EXPECT_LT(r.max_deviation, 1e-15);
}

TEST(Equivalence, DoubleCxIsIdentity) {
    Circuit c(2);
    c.add(Gate::cx(0, 1));
    c.add(Gate::cx(0, 1));
    EXPECT_TRUE(unitary_equivalent(c, Circuit(2), false).equivalent);
}

TEST(Equivalence, GlobalPhaseIsOptional) {
    // Ry(2 pi) = -I.
    Circuit a(1);
    a.add(Gate::ry(0, 2.0 * std::numbers::pi));
    const Circuit id(1);
    EXPECT_FALSE(unitary_equivalent(a, id, false).equivalent);
    EXPECT_TRUE(unitary_equivalent(a, id, true).equivalent);
}

TEST(Equivalence, RejectsSymbolicOrMismatchedCircuits) {
    const Circuit symbolic = build_ansatz({3, 1, EntanglerKind::Linear, EntanglingGate::CX});
    EXPECT_THROW(unitary_equivalent(symbolic, symbolic, false), InvalidArgument);
    EXPECT_THROW(unitary_equivalent(Circuit(2), Circuit(3), false), InvalidArgument);
}

TEST(Equivalence, FullMatchesReversedLinearAtWidthFive) {
    const Circuit full = build_entangler(EntanglerKind::Full, 5, EntanglingGate::CX);
    const Circuit inverse_linear =
        build_entangler(EntanglerKind::Linear, 5, EntanglingGate::CX, EntanglerOrdering::Reversed);
    const auto r = unitary_equivalent(full, inverse_linear, true);
    EXPECT_TRUE(r.equivalent);
    EXPECT_LT(r.max_deviation, 1e-12);
    // Same check against the dense oracle.
    EXPECT_LT((oracle::unitary(full) - oracle::unitary(inverse_linear)).cwiseAbs().maxCoeff(),
              1e-12);
}

TEST(Equivalence, WirePermutationSearchFindsSwap) {
    Circuit a(2);
    a.add(Gate::cx(0, 1));
    Circuit b(2);
    b.add(Gate::cx(1, 0));
    EXPECT_FALSE(unitary_equivalent(a, b, true).equivalent);
    // CX(0,1) is not CX(1,0) followed by an output relabeling either.
    EXPECT_FALSE(equivalent_up_to_wire_permutation(a, b).has_value());
    Circuit swap(2);
    swap.add(Gate::cx(0, 1));
    swap.add(Gate::cx(1, 0));
    swap.add(Gate::cx(0, 1));
    const auto match = equivalent_up_to_wire_permutation(swap, Circuit(2));
    ASSERT_TRUE(match.has_value());
    EXPECT_EQ(match->permutation, (std::vector<std::size_t>{1, 0}));
}

TEST(Names, RoundTrip) {
    for (const EntanglerKind kind : kAllKinds) {
        EXPECT_EQ(parse_entangler_kind(to_string(kind)), kind);
    }
    for (const auto layout : {EncoderLayout::FiveX, EncoderLayout::TenXX, EncoderLayout::TenXX2}) {
        EXPECT_EQ(parse_encoder_layout(to_string(layout)), layout);
    }
    for (const auto map : {AngleMap::PiX, AngleMap::ArctanShift}) {
        EXPECT_EQ(parse_angle_map(to_string(map)), map);
    }
    for (const auto gate : {EntanglingGate::CX, EntanglingGate::CZ}) {
        EXPECT_EQ(parse_entangling_gate(to_string(gate)), gate);
    }
    EXPECT_THROW(parse_entangler_kind("ring"), InvalidArgument);
}

} // namespace
} // namespace qmelt
