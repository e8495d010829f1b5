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

#include "qmelt/cross_validation.hpp"

#include <numeric>
#include <string>

#include "qmelt/error.hpp"
#include "qmelt/number_format.hpp"
#include "qmelt/parallel.hpp"
#include "qmelt/qnn.hpp"
#include "qmelt/rng.hpp"
#include "qmelt/stats.hpp"

namespace qmelt {

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] == fold) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] != fold) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> FoldPlan::fold_sizes() const {
    std::vector<std::size_t> sizes(k, 0);
    for (const std::size_t f : assignment) {
        ++sizes[f];
    }
    return sizes;
}

FoldPlan kfold_split(std::size_t n_records, std::size_t k, std::uint64_t seed) {
    if (k < 2 || k > n_records) {
        throw InvalidArgument("k-fold needs 2 <= k <= n, got k=" + std::to_string(k) +
                              ", n=" + std::to_string(n_records));
    }
    std::vector<std::size_t> order(n_records);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = n_records; i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.assignment.assign(n_records, 0);
    for (std::size_t pos = 0; pos < n_records; ++pos) {
        plan.assignment[order[pos]] = pos % k;
    }
    return plan;
}

std::string model_key(const ModelConfig &config) {
    struct {
        std::string operator()(const QnnConfig &c) const {
            return "qnn/" + to_string(c.encoder.layout) + "/" + to_string(c.encoder.angle_map) +
                   "/" + to_string(c.ansatz.entangler) + "/" + to_string(c.ansatz.gate) + "/w" +
                   std::to_string(c.ansatz.width) + "/d" + std::to_string(c.ansatz.depth);
        }
        std::string operator()(const MlpConfig &c) const {
            return "mlp/" + c.arch.label() + "/l2=" + format_double(c.training.l2_weight);
        }
        std::string operator()(const MeanConfig &) const { return "mean"; }
    } visitor;
    return std::visit(visitor, config);
}

std::size_t parameter_count(const ModelConfig &config) {
    struct {
        std::size_t operator()(const QnnConfig &c) const { return c.ansatz.parameter_count(); }
        std::size_t operator()(const MlpConfig &c) const { return c.arch.parameter_count(); }
        std::size_t operator()(const MeanConfig &) const { return 1; }
    } visitor;
    return std::visit(visitor, config);
}

Scaler fit_fold_scaler(const Dataset &dataset, const FoldPlan &plan, std::size_t fold) {
    std::vector<Features> rows;
    for (const std::size_t i : plan.train_indices(fold)) {
        rows.push_back(dataset.records[i].features);
    }
    return fit_scaler(std::span<const Features>(rows));
}

std::uint64_t fold_training_seed(const ModelConfig &config, const CvSettings &settings,
                                 std::size_t fold) {
    return derive_seed(settings.base_seed, model_key(config) + "/fold" + std::to_string(fold));
}

namespace {

std::vector<FeatureRecord> select(const Dataset &dataset, const std::vector<std::size_t> &idx) {
    std::vector<FeatureRecord> out;
    out.reserve(idx.size());
    for (const std::size_t i : idx) {
        out.push_back(dataset.records[i]);
    }
    return out;
}

std::vector<double> scaled_targets(const std::vector<FeatureRecord> &records) {
    std::vector<double> out;
    out.reserve(records.size());
    for (const FeatureRecord &r : records) {
        out.push_back(scale_target(r.melting_point_c));
    }
    return out;
}

struct FoldData {
    std::vector<FeatureRecord> train;
    std::vector<FeatureRecord> test;
    Scaler scaler;
};

FoldResult run_fold(const FoldData &data, const QnnConfig &config, std::uint64_t seed) {
    QnnModel model = make_model(config.encoder, config.ansatz);
    model.scaler = data.scaler;
    OptimizerSettings settings = config.optimizer;
    settings.seed = seed;
    const TrainResult trained = train(model, data.train, settings, config.restarts);

    auto predictions = [&](const std::vector<FeatureRecord> &records) {
        std::vector<double> out;
        for (const FeatureRecord &r : records) {
            out.push_back(predict(trained.model, r.features));
        }
        return out;
    };
    FoldResult result;
    result.train_rmse_scaled = rmse(predictions(data.train), scaled_targets(data.train));
    result.test_rmse_scaled = rmse(predictions(data.test), scaled_targets(data.test));
    result.cost_trace = trained.cost_trace;
    return result;
}

FoldResult run_fold(const FoldData &data, const MlpConfig &config, std::uint64_t seed) {
    auto inputs = [&](const std::vector<FeatureRecord> &records) {
        std::vector<Features> out;
        for (const FeatureRecord &r : records) {
            out.push_back(data.scaler.transform(r.features));
        }
        return out;
    };
    const auto train_x = inputs(data.train);
    const auto train_y = scaled_targets(data.train);
    TrainingConfig training = config.training;
    training.seed = seed;
    const MlpTrainResult trained = train_mlp(config.arch, train_x, train_y, training);

    auto predictions = [&](const std::vector<Features> &xs) {
        std::vector<double> out;
        for (const Features &x : xs) {
            out.push_back(mlp_forward(config.arch, trained.weights, x));
        }
        return out;
    };
    FoldResult result;
    result.train_rmse_scaled = rmse(predictions(train_x), train_y);
    result.test_rmse_scaled = rmse(predictions(inputs(data.test)), scaled_targets(data.test));
    result.cost_trace = trained.loss_trace;
    return result;
}

FoldResult run_fold(const FoldData &data, const MeanConfig &, std::uint64_t) {
    const auto train_y = scaled_targets(data.train);
    const auto test_y = scaled_targets(data.test);
    const double m = mean(train_y);
    FoldResult result;
    result.train_rmse_scaled = rmse(std::vector<double>(train_y.size(), m), train_y);
    result.test_rmse_scaled = rmse(std::vector<double>(test_y.size(), m), test_y);
    return result;
}

} // namespace

CvResult run_cross_validation(const Dataset &dataset, const ModelConfig &config,
                              const CvSettings &settings) {
    const FoldPlan plan = kfold_split(dataset, settings.k, settings.fold_seed);
    CvResult result;
    result.key = model_key(config);
    result.n_params = parameter_count(config);
    result.settings = settings;
    result.folds.resize(settings.k);

    parallel_for(settings.k, [&](std::size_t fold) {
        FoldData data;
        data.train = select(dataset, plan.train_indices(fold));
        data.test = select(dataset, plan.test_indices(fold));
        data.scaler = fit_fold_scaler(dataset, plan, fold);
        const std::uint64_t seed = fold_training_seed(config, settings, fold);
        FoldResult fr = std::visit([&](const auto &c) { return run_fold(data, c, seed); }, config);
        fr.fold = fold;
        fr.n_train = data.train.size();
        fr.n_test = data.test.size();
        fr.seed = seed;
        result.folds[fold] = std::move(fr);
    });

    double train_sum = 0.0;
    double test_sum = 0.0;
    for (const FoldResult &f : result.folds) {
        train_sum += f.train_rmse_scaled;
        test_sum += f.test_rmse_scaled;
    }
    result.mean_train_rmse_scaled = train_sum / static_cast<double>(settings.k);
    result.mean_test_rmse_scaled = test_sum / static_cast<double>(settings.k);
    return result;
}

} // namespace qmelt
