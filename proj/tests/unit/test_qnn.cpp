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

#include <cmath>
#include <numbers>

#include "qmelt/dataset.hpp"
#include "qmelt/error.hpp"
#include "qmelt/qnn.hpp"

namespace qmelt {
namespace {

constexpr EncoderSpec kArctan5{EncoderLayout::FiveX, AngleMap::ArctanShift};
constexpr AnsatzSpec kLinear5{5, 2, EntanglerKind::Linear, EntanglingGate::CX};

// One qubit, one trainable Ry after an Ry(x) input: <Z> = cos(x + theta).
TEST(ExpectationRegression, OneQubitToyRecoversRotation) {
    constexpr double kTrue = 0.8;
    Circuit ansatz(1);
    ansatz.add_parametrized_ry(0);
    std::vector<StateVector> inputs;
    std::vector<double> targets;
    for (int i = 0; i < 12; ++i) {
        const double x = -1.5 + 0.25 * i;
        inputs.push_back(apply_gate(zero_state(1), Gate::ry(0, x)));
        targets.push_back(std::cos(x + kTrue));
    }
    const ExpectationRegression cost(ansatz, inputs, targets, {0});
    const std::vector<double> truth{kTrue};
    EXPECT_LT(cost(truth), 1e-30);

    const std::vector<double> x0{0.0};
    const PowellResult r =
        powell_minimize([&](std::span<const double> p) { return cost(p); }, x0, {});
    EXPECT_LT(r.value, 1e-14);
    const double wrapped = std::remainder(r.x[0] - kTrue, 2.0 * std::numbers::pi);
    EXPECT_NEAR(wrapped, 0.0, 1e-6);
}

TEST(ExpectationRegression, CostIsMeanSquaredError) {
    Circuit ansatz(1);
    ansatz.add_parametrized_ry(0);
    const std::vector<StateVector> inputs{zero_state(1), zero_state(1)};
    const ExpectationRegression cost(ansatz, inputs, {0.0, 1.0}, {0});
    // theta = 0 predicts 1 for both: ((1-0)^2 + 0) / 2.
    const std::vector<double> zero{0.0};
    EXPECT_DOUBLE_EQ(cost(zero), 0.5);
    EXPECT_DOUBLE_EQ(cost.predict(zero, 0), 1.0);
}

TEST(ExpectationRegression, RealPathMatchesComplexSimulation) {
    Circuit ansatz = build_ansatz(AnsatzSpec{4, 2, EntanglerKind::Circular, EntanglingGate::CZ});
    Circuit cx = build_ansatz(AnsatzSpec{4, 1, EntanglerKind::Full, EntanglingGate::CX});
    ansatz.append(cx);
    std::vector<StateVector> real_inputs;
    std::vector<StateVector> complex_inputs;
    for (int i = 0; i < 5; ++i) {
        StateVector s = zero_state(4);
        for (std::size_t q = 0; q < 4; ++q) {
            s = apply_gate(s, Gate::ry(q, 0.3 * i + 0.7 * static_cast<double>(q)));
        }
        real_inputs.push_back(s);
        std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
        for (Complex &a : amps) {
            a *= Complex{0.0, 1.0};
        }
        complex_inputs.push_back(StateVector::from_amplitudes(amps));
    }
    const std::vector<double> targets{0.1, -0.2, 0.3, 0.0, 0.5};
    const ExpectationRegression fast(ansatz, real_inputs, targets, {0, 2});
    const ExpectationRegression slow(ansatz, complex_inputs, targets, {0, 2});
    std::vector<double> params(ansatz.parameter_count());
    for (std::size_t k = 0; k < params.size(); ++k) {
        params[k] = 0.37 * static_cast<double>(k) - 1.1;
    }
    for (std::size_t i = 0; i < real_inputs.size(); ++i) {
        StateVector state = real_inputs[i];
        state.run(ansatz, params);
        double z = 0.0;
        for (const std::size_t q : {std::size_t{0}, std::size_t{2}}) {
            z += expectation_z(state, q);
        }
        EXPECT_NEAR(fast.predict(params, i), z, 1e-12);
    }
    // A global phase of i forces the complex path and must not change the cost.
    EXPECT_NEAR(slow(params), fast(params), 1e-12);
}

TEST(ExpectationRegression, RejectsInconsistentInputs) {
    Circuit ansatz(2);
    ansatz.add_parametrized_ry(0);
    EXPECT_THROW(ExpectationRegression(ansatz, {}, {}, {0}), InvalidArgument);
    EXPECT_THROW(ExpectationRegression(ansatz, {zero_state(2)}, {0.0, 1.0}, {0}), InvalidArgument);
    EXPECT_THROW(ExpectationRegression(ansatz, {zero_state(3)}, {0.0}, {0}), InvalidArgument);
    EXPECT_THROW(ExpectationRegression(ansatz, {zero_state(2)}, {0.0}, {2}), InvalidArgument);
}

TEST(Decoder, ReadoutQubits) {
    EXPECT_EQ(readout_qubits(Decoder::Z4), (std::vector<std::size_t>{4}));
    EXPECT_EQ(readout_qubits(Decoder::Z4PlusZ9), (std::vector<std::size_t>{4, 9}));
    EXPECT_EQ(decoder_for_width(5), Decoder::Z4);
    EXPECT_EQ(decoder_for_width(10), Decoder::Z4PlusZ9);
    EXPECT_THROW(decoder_for_width(7), InvalidArgument);
}

TEST(Model, WidthMustMatchEncoder) {
    EXPECT_THROW(make_model({EncoderLayout::TenXX, AngleMap::PiX}, kLinear5), InvalidArgument);
    const QnnModel m = make_model({EncoderLayout::TenXX2, AngleMap::PiX},
                                  {10, 1, EntanglerKind::Circular, EntanglingGate::CZ});
    EXPECT_EQ(m.decoder, Decoder::Z4PlusZ9);
    EXPECT_EQ(m.params.size(), 10U);
}

TEST(Model, PredictMatchesHandBuiltCircuit) {
    const Dataset d = generate_synthetic_dataset(20, 0.0, 4);
    QnnModel m = make_model(kArctan5, kLinear5);
    m.scaler = fit_scaler(std::span<const FeatureRecord>(d.records));
    m.params = random_parameters(10, 17);

    const Features &raw = d.records[3].features;
    const auto angles = compile_angles(m.encoder.layout, m.encoder.angle_map, m.scaler.transform(raw));
    Circuit full = build_encoder(m.encoder, angles);
    full.append(bind_parameters(build_ansatz(m.ansatz), m.params));
    StateVector s = zero_state(5);
    s.run(full);
    EXPECT_NEAR(predict(m, raw), expectation_z(s, 4), 1e-14);
}

TEST(Model, JsonRoundTrip) {
    const Dataset d = generate_synthetic_dataset(15, 0.0, 9);
    QnnModel m = make_model(kArctan5, kLinear5);
    m.scaler = fit_scaler(std::span<const FeatureRecord>(d.records));
    m.params = random_parameters(10, 1);
    m.seed = 77;
    EXPECT_EQ(model_from_json(model_to_json(m)), m);
    EXPECT_THROW(model_from_json("{\"layout\": 3}"), ParseError);
    EXPECT_THROW(model_from_json("not json"), ParseError);
}

TEST(Training, ReducesCostMonotonicallyAndIsDeterministic) {
    const Dataset d = generate_synthetic_dataset(25, 50.0, 2);
    QnnModel m = make_model(kArctan5, kLinear5);
    m.scaler = fit_scaler(std::span<const FeatureRecord>(d.records));
    OptimizerSettings s;
    s.max_iterations = 15;
    s.seed = 5;
    const TrainResult a = train(m, d.records, s);
    const TrainResult b = train(m, d.records, s);
    EXPECT_EQ(a.model.params, b.model.params);
    EXPECT_EQ(a.cost_trace, b.cost_trace);
    EXPECT_LT(a.final_cost, a.initial_cost);
    for (std::size_t i = 1; i < a.cost_trace.size(); ++i) {
        EXPECT_LE(a.cost_trace[i], a.cost_trace[i - 1]);
    }
    EXPECT_DOUBLE_EQ(mse_cost(a.model, a.model.params, d.records), a.final_cost);
}

TEST(Training, RestartsNeverDoWorse) {
    const Dataset d = generate_synthetic_dataset(20, 0.0, 6);
    QnnModel m = make_model(kArctan5, {5, 1, EntanglerKind::Linear, EntanglingGate::CX});
    m.scaler = fit_scaler(std::span<const FeatureRecord>(d.records));
    OptimizerSettings s;
    s.max_iterations = 10;
    const TrainResult one = train(m, d.records, s, 1);
    const TrainResult three = train(m, d.records, s, 3);
    EXPECT_LE(three.final_cost, one.final_cost);
}

TEST(Training, RandomParametersAreInRange) {
    for (const double p : random_parameters(500, 3)) {
        EXPECT_GE(p, 0.0);
        EXPECT_LT(p, 2.0 * std::numbers::pi);
    }
}

} // namespace
} // namespace qmelt
