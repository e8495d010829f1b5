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

#include "qmelt/mlp.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "qmelt/error.hpp"
#include "qmelt/rng.hpp"

namespace qmelt {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void check_shapes(const MlpArchitecture &arch, std::span<const double> weights) {
    arch.validate();
    if (weights.size() != arch.parameter_count()) {
        throw InvalidArgument("architecture " + arch.label() + " needs " +
                              std::to_string(arch.parameter_count()) + " weights, got " +
                              std::to_string(weights.size()));
    }
}

// Activations of every layer, input first. Output layer is affine.
std::vector<std::vector<double>> forward_all(const MlpArchitecture &arch,
                                             std::span<const double> weights,
                                             const Features &input) {
    const auto &sizes = arch.layer_sizes;
    std::vector<std::vector<double>> acts;
    acts.reserve(sizes.size());
    acts.emplace_back(input.begin(), input.end());
    std::size_t offset = 0;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        const std::size_t n_in = sizes[l];
        const std::size_t n_out = sizes[l + 1];
        const bool is_output = l + 2 == sizes.size();
        std::vector<double> out(n_out);
        for (std::size_t o = 0; o < n_out; ++o) {
            double z = weights[offset + n_in * n_out + o];
            for (std::size_t i = 0; i < n_in; ++i) {
                z += weights[offset + o * n_in + i] * acts[l][i];
            }
            out[o] = is_output ? z : sigmoid(z);
        }
        acts.push_back(std::move(out));
        offset += n_in * n_out + n_out;
    }
    return acts;
}

} // namespace

std::size_t MlpArchitecture::parameter_count() const {
    std::size_t count = 0;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        count += layer_sizes[l] * layer_sizes[l + 1] + layer_sizes[l + 1];
    }
    return count;
}

void MlpArchitecture::validate() const {
    if (layer_sizes.size() < 2 || layer_sizes.front() != kFeatureCount ||
        layer_sizes.back() != 1) {
        throw InvalidArgument("architecture must start at 5 inputs and end at 1 output, got " +
                              label());
    }
    for (const std::size_t n : layer_sizes) {
        if (n == 0) {
            throw InvalidArgument("empty layer in architecture " + label());
        }
    }
}

std::string MlpArchitecture::label() const {
    std::string out;
    for (std::size_t i = 0; i < layer_sizes.size(); ++i) {
        if (i > 0) {
            out += '-';
        }
        out += std::to_string(layer_sizes[i]);
    }
    return out;
}

MlpArchitecture parse_architecture(std::string_view text) {
    MlpArchitecture arch;
    arch.layer_sizes.clear();
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, '-')) {
        try {
            std::size_t used = 0;
            const auto n = std::stoul(item, &used);
            if (used != item.size()) {
                throw InvalidArgument("bad layer size");
            }
            arch.layer_sizes.push_back(n);
        } catch (const std::exception &) {
            throw InvalidArgument("cannot parse architecture '" + std::string(text) + "'");
        }
    }
    arch.validate();
    return arch;
}

void TrainingConfig::validate() const {
    if (!(learning_rate > 0.0) || epochs < 1 || !(l2_weight >= 0.0)) {
        throw InvalidArgument("training config needs learning_rate > 0, epochs >= 1, "
                              "l2_weight >= 0");
    }
}

double mlp_forward(const MlpArchitecture &arch, std::span<const double> weights,
                   const Features &input) {
    check_shapes(arch, weights);
    return forward_all(arch, weights, input).back()[0];
}

double connection_weight_norm_squared(const MlpArchitecture &arch,
                                      std::span<const double> weights) {
    check_shapes(arch, weights);
    double total = 0.0;
    std::size_t offset = 0;
    for (std::size_t l = 0; l + 1 < arch.layer_sizes.size(); ++l) {
        const std::size_t n_w = arch.layer_sizes[l] * arch.layer_sizes[l + 1];
        for (std::size_t k = 0; k < n_w; ++k) {
            total += weights[offset + k] * weights[offset + k];
        }
        offset += n_w + arch.layer_sizes[l + 1];
    }
    return total;
}

LossAndGradient loss_and_gradient(const MlpArchitecture &arch, std::span<const double> weights,
                                  std::span<const Features> inputs,
                                  std::span<const double> targets, double l2_weight) {
    check_shapes(arch, weights);
    if (inputs.empty() || inputs.size() != targets.size()) {
        throw InvalidArgument("batch must be non-empty with one target per input");
    }
    const auto &sizes = arch.layer_sizes;
    const std::size_t n_layers = sizes.size() - 1;
    std::vector<std::size_t> offsets(n_layers);
    for (std::size_t l = 0, off = 0; l < n_layers; ++l) {
        offsets[l] = off;
        off += sizes[l] * sizes[l + 1] + sizes[l + 1];
    }

    LossAndGradient result;
    result.gradient.assign(weights.size(), 0.0);
    const double scale = 1.0 / static_cast<double>(inputs.size());
    for (std::size_t s = 0; s < inputs.size(); ++s) {
        const auto acts = forward_all(arch, weights, inputs[s]);
        const double residual = acts.back()[0] - targets[s];
        result.loss += residual * residual * scale;

        std::vector<double> delta{2.0 * residual * scale};  // dL/dz at the output
        for (std::size_t l = n_layers; l-- > 0;) {
            const std::size_t n_in = sizes[l];
            const std::size_t n_out = sizes[l + 1];
            const std::size_t off = offsets[l];
            for (std::size_t o = 0; o < n_out; ++o) {
                for (std::size_t i = 0; i < n_in; ++i) {
                    result.gradient[off + o * n_in + i] += delta[o] * acts[l][i];
                }
                result.gradient[off + n_in * n_out + o] += delta[o];
            }
            if (l == 0) {
                break;
            }
            std::vector<double> prev(n_in, 0.0);
            for (std::size_t i = 0; i < n_in; ++i) {
                double sum = 0.0;
                for (std::size_t o = 0; o < n_out; ++o) {
                    sum += weights[off + o * n_in + i] * delta[o];
                }
                const double a = acts[l][i];
                prev[i] = sum * a * (1.0 - a);  // sigmoid'
            }
            delta = std::move(prev);
        }
    }

    if (l2_weight > 0.0) {
        for (std::size_t l = 0; l < n_layers; ++l) {
            const std::size_t n_w = sizes[l] * sizes[l + 1];
            for (std::size_t k = 0; k < n_w; ++k) {
                const double w = weights[offsets[l] + k];
                result.loss += l2_weight * w * w;
                result.gradient[offsets[l] + k] += 2.0 * l2_weight * w;
            }
        }
    }
    return result;
}

AdamState::AdamState(std::vector<double> initial)
    : weights{std::move(initial)}, first_moment(weights.size(), 0.0),
      second_moment(weights.size(), 0.0) {}

void adam_step(AdamState &state, std::span<const double> gradient, double learning_rate) {
    if (gradient.size() != state.weights.size()) {
        throw InvalidArgument("gradient length does not match weights");
    }
    ++state.step;
    const auto t = static_cast<double>(state.step);
    const double correction1 = 1.0 - std::pow(kAdamBeta1, t);
    const double correction2 = 1.0 - std::pow(kAdamBeta2, t);
    for (std::size_t i = 0; i < gradient.size(); ++i) {
        const double g = gradient[i];
        state.first_moment[i] = kAdamBeta1 * state.first_moment[i] + (1.0 - kAdamBeta1) * g;
        state.second_moment[i] =
            kAdamBeta2 * state.second_moment[i] + (1.0 - kAdamBeta2) * g * g;
        const double m_hat = state.first_moment[i] / correction1;
        const double v_hat = state.second_moment[i] / correction2;
        state.weights[i] -= learning_rate * m_hat / (std::sqrt(v_hat) + kAdamEpsilon);
    }
}

std::vector<double> initial_weights(const MlpArchitecture &arch, std::uint64_t seed) {
    arch.validate();
    Rng rng(seed);
    std::vector<double> weights;
    weights.reserve(arch.parameter_count());
    for (std::size_t l = 0; l + 1 < arch.layer_sizes.size(); ++l) {
        const double bound = 1.0 / std::sqrt(static_cast<double>(arch.layer_sizes[l]));
        const std::size_t count =
            arch.layer_sizes[l] * arch.layer_sizes[l + 1] + arch.layer_sizes[l + 1];
        for (std::size_t k = 0; k < count; ++k) {
            weights.push_back(rng.uniform(-bound, bound));
        }
    }
    return weights;
}

MlpTrainResult train_mlp(const MlpArchitecture &arch, std::span<const Features> inputs,
                         std::span<const double> targets, const TrainingConfig &config) {
    config.validate();
    AdamState state(initial_weights(arch, config.seed));
    MlpTrainResult result;
    result.loss_trace.reserve(config.epochs);
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        const auto lg = loss_and_gradient(arch, state.weights, inputs, targets, config.l2_weight);
        if (!std::isfinite(lg.loss)) {
            throw NumericalError("mlp loss became " + std::to_string(lg.loss) + " at epoch " +
                                 std::to_string(epoch));
        }
        result.loss_trace.push_back(lg.loss);
        adam_step(state, lg.gradient, config.learning_rate);
    }
    result.weights = std::move(state.weights);
    return result;
}

} // namespace qmelt
