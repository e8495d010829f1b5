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
 * QNN regression: encoder -> ansatz -> Z-expectation decoder, MSE cost and
 * Powell training.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmelt/circuit_model.hpp"
#include "qmelt/features.hpp"
#include "qmelt/powell.hpp"
#include "qmelt/state_vector.hpp"

namespace qmelt {

/// Z4 reads <Z> on qubit 4 (width 5); Z4PlusZ9 reads <Z4> + <Z9> (width 10).
enum class Decoder { Z4, Z4PlusZ9 };

std::string to_string(Decoder decoder);
Decoder parse_decoder(std::string_view text);

std::vector<std::size_t> readout_qubits(Decoder decoder);
std::size_t required_width(Decoder decoder);

/// Decoder matching a 5- or 10-qubit register.
Decoder decoder_for_width(std::size_t width);

struct QnnModel {
    EncoderSpec encoder;
    AnsatzSpec ansatz;
    Decoder decoder{Decoder::Z4};
    std::vector<double> params;  // radians, (block, qubit) order
    Scaler scaler;
    std::uint64_t seed{0};

    /// Checks encoder/ansatz/decoder widths agree and params has
    /// ansatz.parameter_count() entries.
    void validate() const;

    friend bool operator==(const QnnModel &, const QnnModel &) = default;
};

/// Model with matching decoder and zero parameters (scaler left default).
QnnModel make_model(const EncoderSpec &encoder, const AnsatzSpec &ansatz);

/// Encoded register for one raw feature vector.
StateVector encode(const QnnModel &model, const Features &raw);

/// Scaled melting-point prediction for raw (unscaled) features.
double predict(const QnnModel &model, const Features &raw);

/**
 * @brief Mean squared error of a parametrized circuit's Z readout against
 * targets, with the encoded input registers cached.
 *
 * Predictions are accumulated in input order so the cost is bitwise
 * reproducible. Ry, CX and CZ are real, so when every input register is
 * real the circuit is simulated on real amplitudes.
 */
class ExpectationRegression {
  public:
    ExpectationRegression(Circuit ansatz, std::vector<StateVector> inputs,
                          std::vector<double> targets, std::vector<std::size_t> readout);

    [[nodiscard]] std::size_t parameter_count() const { return ansatz_.parameter_count(); }
    [[nodiscard]] std::size_t size() const { return inputs_.size(); }

    [[nodiscard]] double predict(std::span<const double> params, std::size_t index) const;
    [[nodiscard]] double operator()(std::span<const double> params) const;

  private:
    struct Op {
        GateKind kind;
        std::size_t first;   // Ry: stride; CX/CZ: control bit
        std::size_t second;  // CX/CZ: target bit
        std::ptrdiff_t slot; // parameter slot, -1 for fixed gates
        double angle;
    };

    [[nodiscard]] std::vector<std::pair<double, double>>
    rotations(std::span<const double> params) const;
    [[nodiscard]] double predict_real(std::span<const std::pair<double, double>> rotations,
                                      std::size_t index, std::vector<double> &scratch) const;

    Circuit ansatz_;
    std::vector<StateVector> inputs_;
    std::vector<double> targets_;
    std::vector<std::size_t> readout_;
    std::vector<Op> ops_;
    std::vector<std::vector<double>> real_inputs_;  // empty unless every input is real
};

/// Cost functor for `model`'s architecture on `records` (scaled with
/// model.scaler). Throws InvalidArgument for an empty set.
ExpectationRegression make_cost(const QnnModel &model,
                                std::span<const FeatureRecord> records);

/// MSE of `params` on `records` under the architecture of `model`.
double mse_cost(const QnnModel &model, std::span<const double> params,
                std::span<const FeatureRecord> records);

struct TrainResult {
    QnnModel model;
    double initial_cost{0.0};
    double final_cost{0.0};
    std::size_t iterations{0};
    std::vector<double> cost_trace;  // per Powell sweep, starting at initial cost
};

/**
 * @brief Fits model.params by Powell minimization of the MSE.
 *
 * Initial parameters are uniform in [0, 2pi) from settings.seed. With
 * `restarts` > 1 each restart draws from a seed derived from settings.seed and
 * the best final cost wins (earliest on ties). model.scaler must already be
 * fitted.
 */
TrainResult train(QnnModel model, std::span<const FeatureRecord> records,
                  const OptimizerSettings &settings, std::size_t restarts = 1);

/// Uniform [0, 2pi) initial parameters.
std::vector<double> random_parameters(std::size_t count, std::uint64_t seed);

/// JSON document holding every field needed to rebuild the model exactly.
std::string model_to_json(const QnnModel &model);
QnnModel model_from_json(const std::string &text);

} // namespace qmelt
