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
 * Fully connected sigmoid regression network trained with full-batch Adam
 * and an optional L2 penalty on connection weights.
 *
 * Parameters are stored layer by layer: the (out x in) weight matrix in
 * row-major order, then the out biases. Hidden layers use the logistic
 * sigmoid; the output neuron is affine.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmelt/features.hpp"

namespace qmelt {

struct MlpArchitecture {
    std::vector<std::size_t> layer_sizes{5, 1};

    /// sum over layers of n_i * n_{i+1} + n_{i+1}.
    [[nodiscard]] std::size_t parameter_count() const;

    /// Requires >= 2 layers, input width 5, output width 1, no empty layer.
    void validate() const;

    /// "5-5-1" style label.
    [[nodiscard]] std::string label() const;

    friend bool operator==(const MlpArchitecture &, const MlpArchitecture &) = default;
};

MlpArchitecture parse_architecture(std::string_view text);

struct TrainingConfig {
    double learning_rate{0.02};
    std::size_t epochs{10000};
    double l2_weight{1e-4};
    std::uint64_t seed{0};

    void validate() const;

    friend bool operator==(const TrainingConfig &, const TrainingConfig &) = default;
};

double mlp_forward(const MlpArchitecture &arch, std::span<const double> weights,
                   const Features &input);

struct LossAndGradient {
    double loss{0.0};
    std::vector<double> gradient;
};

/// MSE over the batch plus l2_weight * (sum of squared connection weights).
LossAndGradient loss_and_gradient(const MlpArchitecture &arch, std::span<const double> weights,
                                  std::span<const Features> inputs,
                                  std::span<const double> targets, double l2_weight);

/// Sum of squared connection weights (biases excluded).
double connection_weight_norm_squared(const MlpArchitecture &arch,
                                      std::span<const double> weights);

struct AdamState {
    std::vector<double> weights;
    std::vector<double> first_moment;
    std::vector<double> second_moment;
    std::size_t step{0};

    explicit AdamState(std::vector<double> initial);
};

inline constexpr double kAdamBeta1 = 0.9;
inline constexpr double kAdamBeta2 = 0.999;
inline constexpr double kAdamEpsilon = 1e-8;

void adam_step(AdamState &state, std::span<const double> gradient, double learning_rate);

/// Uniform [-1/sqrt(fan_in), 1/sqrt(fan_in)] for weights and biases.
std::vector<double> initial_weights(const MlpArchitecture &arch, std::uint64_t seed);

struct MlpTrainResult {
    std::vector<double> weights;
    std::vector<double> loss_trace;  // loss at the start of each epoch
};

/// Full-batch Adam. Throws NumericalError if the loss stops being finite.
MlpTrainResult train_mlp(const MlpArchitecture &arch, std::span<const Features> inputs,
                         std::span<const double> targets, const TrainingConfig &config);

} // namespace qmelt
