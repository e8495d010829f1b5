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

#include "qmelt/qnn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "qmelt/error.hpp"
#include "qmelt/rng.hpp"

namespace qmelt {

std::string to_string(Decoder decoder) {
    return decoder == Decoder::Z4 ? "z4" : "z4+z9";
}

Decoder parse_decoder(std::string_view text) {
    if (text == "z4" || text == "Z4") {
        return Decoder::Z4;
    }
    if (text == "z4+z9" || text == "Z4+Z9" || text == "z4z9") {
        return Decoder::Z4PlusZ9;
    }
    throw InvalidArgument("unknown decoder '" + std::string(text) + "'");
}

std::vector<std::size_t> readout_qubits(Decoder decoder) {
    if (decoder == Decoder::Z4) {
        return {4};
    }
    return {4, 9};
}

std::size_t required_width(Decoder decoder) { return decoder == Decoder::Z4 ? 5 : 10; }

Decoder decoder_for_width(std::size_t width) {
    if (width == 5) {
        return Decoder::Z4;
    }
    if (width == 10) {
        return Decoder::Z4PlusZ9;
    }
    throw InvalidArgument("no decoder defined for width " + std::to_string(width));
}

void QnnModel::validate() const {
    const std::size_t width = required_width(decoder);
    if (encoder.n_qubits() != width || ansatz.width != width) {
        throw InvalidArgument("decoder " + to_string(decoder) + " needs width " +
                              std::to_string(width) + " (encoder " +
                              std::to_string(encoder.n_qubits()) + ", ansatz " +
                              std::to_string(ansatz.width) + ")");
    }
    ansatz.validate();
    if (params.size() != ansatz.parameter_count()) {
        throw InvalidArgument("model has " + std::to_string(params.size()) +
                              " parameters, ansatz needs " +
                              std::to_string(ansatz.parameter_count()));
    }
}

QnnModel make_model(const EncoderSpec &encoder, const AnsatzSpec &ansatz) {
    QnnModel model;
    model.encoder = encoder;
    model.ansatz = ansatz;
    model.decoder = decoder_for_width(ansatz.width);
    model.params.assign(ansatz.parameter_count(), 0.0);
    model.validate();
    return model;
}

StateVector encode(const QnnModel &model, const Features &raw) {
    const Features scaled = model.scaler.transform(raw);
    const auto angles = compile_angles(model.encoder.layout, model.encoder.angle_map, scaled);
    StateVector state = StateVector::zero(model.encoder.n_qubits());
    state.run(build_encoder(model.encoder, angles));
    return state;
}

namespace {

double readout(const StateVector &state, std::span<const std::size_t> qubits) {
    double value = 0.0;
    for (const std::size_t q : qubits) {
        value += expectation_z(state, q);
    }
    return value;
}

} // namespace

double predict(const QnnModel &model, const Features &raw) {
    model.validate();
    StateVector state = encode(model, raw);
    state.run(build_ansatz(model.ansatz), model.params);
    return readout(state, readout_qubits(model.decoder));
}

ExpectationRegression::ExpectationRegression(Circuit ansatz, std::vector<StateVector> inputs,
                                             std::vector<double> targets,
                                             std::vector<std::size_t> readout)
    : ansatz_{std::move(ansatz)}, inputs_{std::move(inputs)}, targets_{std::move(targets)},
      readout_{std::move(readout)} {
    if (inputs_.empty()) {
        throw InvalidArgument("regression needs at least one record");
    }
    if (inputs_.size() != targets_.size()) {
        throw InvalidArgument("input and target counts differ");
    }
    for (const StateVector &s : inputs_) {
        if (s.n_qubits() != ansatz_.n_qubits()) {
            throw InvalidArgument("input register width does not match ansatz");
        }
    }
    for (const std::size_t q : readout_) {
        if (q >= ansatz_.n_qubits()) {
            throw InvalidArgument("readout qubit out of range");
        }
    }

    const std::size_t n = ansatz_.n_qubits();
    const auto bit = [n](std::size_t q) { return std::size_t{1} << (n - 1 - q); };
    const auto &gates = ansatz_.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        const auto slot = ansatz_.slot_of_gate(i);
        const std::ptrdiff_t slot_index = slot ? static_cast<std::ptrdiff_t>(*slot) : -1;
        switch (g.kind) {
        case GateKind::Ry:
            ops_.push_back({g.kind, bit(g.target), 0, slot_index, g.angle});
            break;
        case GateKind::CX:
            ops_.push_back({g.kind, bit(g.control), bit(g.target), -1, 0.0});
            break;
        case GateKind::CZ:
            ops_.push_back({g.kind, bit(g.control), bit(g.target), -1, 0.0});
            break;
        }
    }

    const bool all_real = std::all_of(inputs_.begin(), inputs_.end(), [](const StateVector &s) {
        return std::all_of(s.amplitudes().begin(), s.amplitudes().end(),
                           [](const Complex &a) { return a.imag() == 0.0; });
    });
    if (all_real) {
        for (const StateVector &s : inputs_) {
            std::vector<double> re(s.size());
            std::transform(s.amplitudes().begin(), s.amplitudes().end(), re.begin(),
                           [](const Complex &a) { return a.real(); });
            real_inputs_.push_back(std::move(re));
        }
    }
}

std::vector<std::pair<double, double>>
ExpectationRegression::rotations(std::span<const double> params) const {
    if (params.size() != ansatz_.parameter_count()) {
        throw InvalidArgument("expected " + std::to_string(ansatz_.parameter_count()) +
                              " parameters, got " + std::to_string(params.size()));
    }
    std::vector<std::pair<double, double>> cs(ops_.size(), {1.0, 0.0});
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        if (ops_[k].kind == GateKind::Ry) {
            const double theta =
                ops_[k].slot >= 0 ? params[static_cast<std::size_t>(ops_[k].slot)] : ops_[k].angle;
            cs[k] = {std::cos(0.5 * theta), std::sin(0.5 * theta)};
        }
    }
    return cs;
}

double ExpectationRegression::predict_real(std::span<const std::pair<double, double>> rotations,
                                           std::size_t index,
                                           std::vector<double> &scratch) const {
    const std::vector<double> &input = real_inputs_[index];
    scratch.assign(input.begin(), input.end());
    double *v = scratch.data();
    const std::size_t dim = scratch.size();
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        const Op &op = ops_[k];
        switch (op.kind) {
        case GateKind::Ry: {
            const auto [c, s] = rotations[k];
            const std::size_t stride = op.first;
            for (std::size_t block = 0; block < dim; block += 2 * stride) {
                for (std::size_t i = block; i < block + stride; ++i) {
                    const double a0 = v[i];
                    const double a1 = v[i + stride];
                    v[i] = c * a0 - s * a1;
                    v[i + stride] = s * a0 + c * a1;
                }
            }
            break;
        }
        case GateKind::CX:
        case GateKind::CZ: {
            // Visit only indices with both touched bits clear, then offset.
            const std::size_t lo = std::min(op.first, op.second);
            const std::size_t hi = std::max(op.first, op.second);
            for (std::size_t j = 0; j < dim / 4; ++j) {
                std::size_t i = ((j & ~(lo - 1)) << 1) | (j & (lo - 1));
                i = ((i & ~(hi - 1)) << 1) | (i & (hi - 1));
                if (op.kind == GateKind::CX) {
                    std::swap(v[i | op.first], v[i | op.first | op.second]);
                } else {
                    v[i | lo | hi] = -v[i | lo | hi];
                }
            }
            break;
        }
        }
    }
    const std::size_t n = ansatz_.n_qubits();
    double value = 0.0;
    for (const std::size_t q : readout_) {
        const std::size_t b = std::size_t{1} << (n - 1 - q);
        double z = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            z += (i & b) != 0 ? -v[i] * v[i] : v[i] * v[i];
        }
        value += z;
    }
    return value;
}

double ExpectationRegression::predict(std::span<const double> params, std::size_t index) const {
    if (index >= inputs_.size()) {
        throw InvalidArgument("record index out of range");
    }
    if (!real_inputs_.empty()) {
        std::vector<double> scratch;
        return predict_real(rotations(params), index, scratch);
    }
    StateVector state = inputs_[index];
    state.run(ansatz_, params);
    return readout(state, readout_);
}

double ExpectationRegression::operator()(std::span<const double> params) const {
    double total = 0.0;
    if (!real_inputs_.empty()) {
        const auto cs = rotations(params);
        std::vector<double> scratch;
        for (std::size_t i = 0; i < inputs_.size(); ++i) {
            const double residual = predict_real(cs, i, scratch) - targets_[i];
            total += residual * residual;
        }
    } else {
        for (std::size_t i = 0; i < inputs_.size(); ++i) {
            const double residual = predict(params, i) - targets_[i];
            total += residual * residual;
        }
    }
    return total / static_cast<double>(inputs_.size());
}

ExpectationRegression make_cost(const QnnModel &model, std::span<const FeatureRecord> records) {
    if (records.empty()) {
        throw InvalidArgument("training set is empty");
    }
    std::vector<StateVector> inputs;
    std::vector<double> targets;
    inputs.reserve(records.size());
    targets.reserve(records.size());
    for (const FeatureRecord &r : records) {
        inputs.push_back(encode(model, r.features));
        targets.push_back(scale_target(r.melting_point_c));
    }
    return ExpectationRegression(build_ansatz(model.ansatz), std::move(inputs),
                                 std::move(targets), readout_qubits(model.decoder));
}

double mse_cost(const QnnModel &model, std::span<const double> params,
                std::span<const FeatureRecord> records) {
    return make_cost(model, records)(params);
}

std::vector<double> random_parameters(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> params(count);
    for (double &p : params) {
        p = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return params;
}

TrainResult train(QnnModel model, std::span<const FeatureRecord> records,
                  const OptimizerSettings &settings, std::size_t restarts) {
    model.params.assign(model.ansatz.parameter_count(), 0.0);
    model.validate();
    settings.validate();
    const ExpectationRegression cost = make_cost(model, records);
    const Objective objective = [&cost](std::span<const double> p) { return cost(p); };

    TrainResult best;
    bool have_best = false;
    for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
        const std::uint64_t seed =
            r == 0 ? settings.seed : derive_seed(settings.seed, "restart-" + std::to_string(r));
        const std::vector<double> x0 = random_parameters(model.ansatz.parameter_count(), seed);
        PowellResult run = powell_minimize(objective, x0, settings);
        if (!have_best || run.value < best.final_cost) {
            best.model = model;
            best.model.params = std::move(run.x);
            best.initial_cost = run.trace.front();
            best.final_cost = run.value;
            best.iterations = run.iterations;
            best.cost_trace = std::move(run.trace);
            have_best = true;
        }
    }
    best.model.seed = settings.seed;
    return best;
}

namespace {

nlohmann::json features_json(const Features &f) { return std::vector<double>(f.begin(), f.end()); }

Features features_from(const nlohmann::json &j) {
    const auto values = j.get<std::vector<double>>();
    if (values.size() != kFeatureCount) {
        throw ParseError("scaler vectors must have 5 entries");
    }
    Features f{};
    std::copy(values.begin(), values.end(), f.begin());
    return f;
}

} // namespace

std::string model_to_json(const QnnModel &model) {
    nlohmann::json doc;
    doc["layout"] = to_string(model.encoder.layout);
    doc["angle_map"] = to_string(model.encoder.angle_map);
    doc["width"] = model.ansatz.width;
    doc["depth"] = model.ansatz.depth;
    doc["entangler"] = to_string(model.ansatz.entangler);
    doc["gate"] = to_string(model.ansatz.gate);
    doc["decoder"] = to_string(model.decoder);
    doc["params"] = model.params;
    doc["scaler"] = {{"mean", features_json(model.scaler.mean)},
                     {"std", features_json(model.scaler.std)},
                     {"max_abs", features_json(model.scaler.max_abs)}};
    doc["seed"] = model.seed;
    return doc.dump(2) + "\n";
}

QnnModel model_from_json(const std::string &text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        QnnModel model;
        model.encoder.layout = parse_encoder_layout(doc.at("layout").get<std::string>());
        model.encoder.angle_map = parse_angle_map(doc.at("angle_map").get<std::string>());
        model.ansatz.width = doc.at("width").get<std::size_t>();
        model.ansatz.depth = doc.at("depth").get<std::size_t>();
        model.ansatz.entangler = parse_entangler_kind(doc.at("entangler").get<std::string>());
        model.ansatz.gate = parse_entangling_gate(doc.at("gate").get<std::string>());
        model.decoder = parse_decoder(doc.at("decoder").get<std::string>());
        model.params = doc.at("params").get<std::vector<double>>();
        model.scaler.mean = features_from(doc.at("scaler").at("mean"));
        model.scaler.std = features_from(doc.at("scaler").at("std"));
        model.scaler.max_abs = features_from(doc.at("scaler").at("max_abs"));
        model.seed = doc.at("seed").get<std::uint64_t>();
        model.validate();
        return model;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("model document: ") + e.what());
    } catch (const InvalidArgument &e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
}

} // namespace qmelt
