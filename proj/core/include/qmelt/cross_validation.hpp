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
 * Deterministic k-fold cross-validation for QNN, MLP and mean-baseline models.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qmelt/circuit_model.hpp"
#include "qmelt/dataset.hpp"
#include "qmelt/mlp.hpp"
#include "qmelt/powell.hpp"

namespace qmelt {

struct FoldPlan {
    std::size_t k{5};
    std::vector<std::size_t> assignment;  // record index -> fold id
    std::uint64_t seed{0};

    [[nodiscard]] std::vector<std::size_t> test_indices(std::size_t fold) const;
    [[nodiscard]] std::vector<std::size_t> train_indices(std::size_t fold) const;
    [[nodiscard]] std::vector<std::size_t> fold_sizes() const;
};

/// Seeded Fisher-Yates shuffle, then round-robin fold assignment. Throws
/// InvalidArgument unless 2 <= k <= n.
FoldPlan kfold_split(std::size_t n_records, std::size_t k, std::uint64_t seed);
inline FoldPlan kfold_split(const Dataset &dataset, std::size_t k, std::uint64_t seed) {
    return kfold_split(dataset.size(), k, seed);
}

struct QnnConfig {
    EncoderSpec encoder;
    AnsatzSpec ansatz;
    OptimizerSettings optimizer;
    std::size_t restarts{1};
};

struct MlpConfig {
    MlpArchitecture arch;
    TrainingConfig training;
};

/// Predicts the training-fold mean target; reference row for sweeps.
struct MeanConfig {};

using ModelConfig = std::variant<QnnConfig, MlpConfig, MeanConfig>;

/// Stable identity string, e.g. "qnn/5x/arctan/linear/cx/w5/d3". Seeds derive
/// from it, so it must not include seeds or budgets.
std::string model_key(const ModelConfig &config);

/// Trainable parameter count (x-axis of the RMSE-vs-parameters plots).
std::size_t parameter_count(const ModelConfig &config);

struct CvSettings {
    std::size_t k{5};
    std::uint64_t fold_seed{0};  ///< fold assignment
    std::uint64_t base_seed{0};  ///< model initialization, combined with key and fold
};

struct FoldResult {
    std::size_t fold{0};
    std::size_t n_train{0};
    std::size_t n_test{0};
    double train_rmse_scaled{0.0};
    double test_rmse_scaled{0.0};
    std::uint64_t seed{0};
    std::vector<double> cost_trace;  ///< QNN: per sweep; MLP: per epoch
};

struct CvResult {
    std::string key;
    std::size_t n_params{0};
    std::vector<FoldResult> folds;
    double mean_train_rmse_scaled{0.0};
    double mean_test_rmse_scaled{0.0};
    CvSettings settings;

    [[nodiscard]] double mean_train_rmse_celsius() const {
        return mean_train_rmse_scaled * kTargetScaleCelsius;
    }
    [[nodiscard]] double mean_test_rmse_celsius() const {
        return mean_test_rmse_scaled * kTargetScaleCelsius;
    }
};

/// Scaler fitted on the training folds of `fold` only.
Scaler fit_fold_scaler(const Dataset &dataset, const FoldPlan &plan, std::size_t fold);

/// Seed used for training `config` on `fold`.
std::uint64_t fold_training_seed(const ModelConfig &config, const CvSettings &settings,
                                 std::size_t fold);

/// Runs every fold (in parallel, merged in fold order).
CvResult run_cross_validation(const Dataset &dataset, const ModelConfig &config,
                              const CvSettings &settings);

} // namespace qmelt
