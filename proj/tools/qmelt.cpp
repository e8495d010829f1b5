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

// qmelt: command-line driver for dataset synthesis, model training,
// cross-validation sweeps, expressibility scans and entangler reduction checks.
//
// Exit codes: 0 success, 1 usage or config error, 2 data error, 3 numerical
// failure.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmelt/config.hpp"
#include "qmelt/cross_validation.hpp"
#include "qmelt/dataset.hpp"
#include "qmelt/error.hpp"
#include "qmelt/expressibility.hpp"
#include "qmelt/mlp.hpp"
#include "qmelt/number_format.hpp"
#include "qmelt/qnn.hpp"
#include "qmelt/reduction.hpp"
#include "qmelt/report.hpp"
#include "qmelt/stats.hpp"
#include "qmelt/sweep.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kNumerical = 3 };

void make_output_dir(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw qmelt::IoError("cannot create output directory '" + dir.string() + "'");
    }
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw qmelt::IoError("cannot write '" + path.string() + "'");
    }
}

void print_cv_summary(const qmelt::CvResult &r) {
    std::cout << r.key << ": params=" << r.n_params
              << " train_rmse_c=" << qmelt::format_double(r.mean_train_rmse_celsius())
              << " test_rmse_c=" << qmelt::format_double(r.mean_test_rmse_celsius()) << '\n';
}

// --- synth-data -------------------------------------------------------------

struct SynthArgs {
    std::size_t n{70};
    double noise{0.0};
    std::uint64_t seed{0};
    std::string out;
};

int run_synth(const SynthArgs &a) {
    const qmelt::Dataset dataset = qmelt::generate_synthetic_dataset(a.n, a.noise, a.seed);
    qmelt::save_dataset(dataset, a.out);
    std::cout << "n: " << a.n << "\nnoise: " << qmelt::format_double(a.noise)
              << "\nseed: " << a.seed << '\n';
    return kOk;
}

// --- train ------------------------------------------------------------------

struct TrainArgs {
    std::string dataset;
    std::string config;
    std::string out;
};

std::vector<double> scaled_targets(const qmelt::Dataset &d) {
    std::vector<double> y;
    for (const auto &r : d.records) {
        y.push_back(qmelt::scale_target(r.melting_point_c));
    }
    return y;
}

nlohmann::json scaler_json(const qmelt::Scaler &s) {
    return {{"mean", std::vector<double>(s.mean.begin(), s.mean.end())},
            {"std", std::vector<double>(s.std.begin(), s.std.end())},
            {"max_abs", std::vector<double>(s.max_abs.begin(), s.max_abs.end())}};
}

void write_trace(const fs::path &path, const std::vector<double> &trace) {
    std::string text = "step,cost\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        text += std::to_string(i) + "," + qmelt::format_double(trace[i]) + "\n";
    }
    write_text(path, text);
}

int run_train(const TrainArgs &a) {
    const qmelt::RunConfig config = qmelt::load_run_config(a.config);
    const qmelt::Dataset dataset = qmelt::load_dataset(a.dataset);
    const fs::path out(a.out);
    make_output_dir(out);
    write_text(out / "config.yaml", qmelt::echo_config(config));

    const qmelt::Scaler scaler = qmelt::fit_scaler(std::span<const qmelt::FeatureRecord>(dataset.records));
    const std::vector<double> y = scaled_targets(dataset);
    std::vector<double> predictions;

    if (const auto *q = std::get_if<qmelt::QnnConfig>(&config.model)) {
        qmelt::QnnModel model = qmelt::make_model(q->encoder, q->ansatz);
        model.scaler = scaler;
        qmelt::OptimizerSettings settings = q->optimizer;
        settings.seed = config.cv.base_seed;
        const qmelt::TrainResult trained =
            qmelt::train(model, dataset.records, settings, q->restarts);
        write_text(out / "model.json", qmelt::model_to_json(trained.model) + "\n");
        write_trace(out / "trace.csv", trained.cost_trace);
        for (const auto &r : dataset.records) {
            predictions.push_back(qmelt::predict(trained.model, r.features));
        }
    } else if (const auto *m = std::get_if<qmelt::MlpConfig>(&config.model)) {
        std::vector<qmelt::Features> x;
        for (const auto &r : dataset.records) {
            x.push_back(scaler.transform(r.features));
        }
        qmelt::TrainingConfig training = m->training;
        training.seed = config.cv.base_seed;
        const qmelt::MlpTrainResult trained = qmelt::train_mlp(m->arch, x, y, training);
        nlohmann::json doc{{"model", "mlp"},
                           {"arch", m->arch.label()},
                           {"weights", trained.weights},
                           {"scaler", scaler_json(scaler)}};
        write_text(out / "model.json", doc.dump(2) + "\n");
        write_trace(out / "trace.csv", trained.loss_trace);
        for (const auto &xi : x) {
            predictions.push_back(qmelt::mlp_forward(m->arch, trained.weights, xi));
        }
    } else {
        const double level = qmelt::mean(y);
        write_text(out / "model.json",
                   nlohmann::json{{"model", "mean"}, {"value", level}}.dump(2) + "\n");
        predictions.assign(y.size(), level);
    }
    const double train_rmse = qmelt::rmse(predictions, y);
    if (!std::isfinite(train_rmse)) {
        throw qmelt::NumericalError("training produced a non-finite error");
    }
    std::cout << "train_rmse_c=" << qmelt::format_double(train_rmse * qmelt::kTargetScaleCelsius)
              << '\n';
    return kOk;
}

// --- cv / sweep / baseline ----------------------------------------------------

int emit_cells(const qmelt::Dataset &dataset, const std::vector<qmelt::ModelConfig> &configs,
               const qmelt::CvSettings &cv, const fs::path &out) {
    make_output_dir(out);
    qmelt::ResultTableWriter live(out / "results.csv");
    const auto cells = qmelt::run_sweep(
        dataset, configs, cv, [&](std::size_t i, const qmelt::SweepCell &cell) {
            live.append(qmelt::to_row(i, cell, cv));
            if (cell.result) {
                print_cv_summary(*cell.result);
            } else {
                std::cerr << "cell " << i << " failed: " << cell.error << '\n';
            }
        });
    qmelt::emit_report(cells, cv, out);
    for (const auto &cell : cells) {
        if (cell.result) {
            return kOk;
        }
    }
    std::cerr << "every cell failed\n";
    return kNumerical;
}

struct CvArgs {
    std::string dataset;
    std::string config;
    std::string out;
};

int run_cv(const CvArgs &a) {
    const qmelt::RunConfig config = qmelt::load_run_config(a.config);
    const qmelt::Dataset dataset = qmelt::load_dataset(a.dataset);
    const fs::path out(a.out);
    make_output_dir(out);
    write_text(out / "config.yaml", qmelt::echo_config(config));
    // Errors propagate here, unlike a sweep where a failing cell is recorded.
    const qmelt::CvResult result = qmelt::run_cross_validation(dataset, config.model, config.cv);
    qmelt::emit_report({qmelt::SweepCell{config.model, result, {}}}, config.cv, out);
    print_cv_summary(result);
    return kOk;
}

struct SweepArgs {
    std::string dataset;
    std::string config;
    std::string out;
};

int run_sweep_cmd(const SweepArgs &a) {
    const qmelt::SweepConfig config = qmelt::load_sweep_config(a.config);
    const qmelt::Dataset dataset = qmelt::load_dataset(a.dataset);
    const fs::path out(a.out);
    make_output_dir(out);
    write_text(out / "config.yaml", qmelt::echo_config(config));
    return emit_cells(dataset, qmelt::expand_grid(config.grid), config.cv, out);
}

struct BaselineArgs {
    std::string dataset;
    std::vector<std::string> archs{"5-5-1"};
    std::vector<double> l2{1e-4};
    double learning_rate{0.02};
    std::size_t epochs{10000};
    std::size_t folds{5};
    std::uint64_t fold_seed{0};
    std::uint64_t seed{0};
    std::string out;
};

int run_baseline(const BaselineArgs &a) {
    qmelt::SweepConfig config;
    qmelt::MlpGrid grid;
    for (const auto &arch : a.archs) {
        grid.archs.push_back(qmelt::parse_architecture(arch));
    }
    grid.l2_weights = a.l2;
    grid.training.learning_rate = a.learning_rate;
    grid.training.epochs = a.epochs;
    for (const double w : a.l2) {
        qmelt::TrainingConfig t = grid.training;
        t.l2_weight = w;
        t.validate();
    }
    config.grid.mlp = grid;
    config.cv = {a.folds, a.fold_seed, a.seed};
    const qmelt::Dataset dataset = qmelt::load_dataset(a.dataset);
    const fs::path out(a.out);
    make_output_dir(out);
    write_text(out / "config.yaml", qmelt::echo_config(config));
    return emit_cells(dataset, qmelt::expand_grid(config.grid), config.cv, out);
}

// --- express -----------------------------------------------------------------

struct ExpressArgs {
    std::string config;
    std::vector<std::string> ansatzes;
    std::size_t width{5};
    std::vector<std::size_t> depths;
    std::size_t pairs{5000};
    std::size_t bins{75};
    std::size_t entropy_samples{1000};
    std::uint64_t seed{0};
    std::string out;
};

int run_express(const ExpressArgs &a, const CLI::App &cmd) {
    qmelt::ExpressConfig config;
    if (!a.config.empty()) {
        config = qmelt::load_express_config(a.config);
    } else {
        for (const std::string kind : {"linear", "circular", "circular2", "circular4", "full"}) {
            config.ansatzes.emplace_back(qmelt::parse_entangler_kind(kind),
                                         qmelt::EntanglingGate::CX);
        }
    }
    // Flags given on the command line override the file.
    if (cmd.count("--ansatz") > 0) {
        config.ansatzes.clear();
        for (const auto &name : a.ansatzes) {
            config.ansatzes.push_back(qmelt::parse_ansatz_name(name));
        }
    }
    if (cmd.count("--width") > 0) {
        config.width = a.width;
    }
    if (cmd.count("--depths") > 0) {
        config.depths = a.depths;
    }
    if (cmd.count("--pairs") > 0) {
        config.settings.n_pairs = a.pairs;
    }
    if (cmd.count("--bins") > 0) {
        config.settings.n_bins = a.bins;
    }
    if (cmd.count("--entropy-samples") > 0) {
        config.settings.entropy_samples = a.entropy_samples;
    }
    if (cmd.count("--seed") > 0) {
        config.settings.seed = a.seed;
    }
    const auto specs = config.expand();
    const fs::path out(a.out);
    make_output_dir(out);
    write_text(out / "config.yaml", qmelt::echo_config(config));

    std::vector<qmelt::ExpressibilityReport> reports;
    for (const auto &spec : specs) {
        reports.push_back(qmelt::evaluate_expressibility(spec, config.settings));
        std::cout << spec.label() << ": kl=" << qmelt::format_double(reports.back().kl_divergence)
                  << " entropy="
                  << qmelt::format_double(reports.back().mean_entanglement_entropy) << '\n';
    }
    qmelt::emit_report(reports, out);
    return kOk;
}

// --- reduce-check --------------------------------------------------------------

struct ReduceArgs {
    std::string entangler{"full"};
    std::size_t width{5};
    std::string gate{"cx"};
    std::string out;
};

int run_reduce(const ReduceArgs &a) {
    const auto kind = qmelt::parse_entangler_kind(a.entangler);
    const auto gate = qmelt::parse_entangling_gate(a.gate);
    const qmelt::ReductionReport report = qmelt::check_reduction(kind, a.width, gate);
    if (!a.out.empty()) {
        qmelt::write_reduction_table(report, a.out);
    }
    std::cout << "entangler: " << a.entangler << "\nwidth: " << a.width << "\ngate: " << a.gate
              << "\ncandidate: " << qmelt::to_string(report.target) << '\n';
    for (const auto &c : report.checks) {
        std::cout << "ordering " << qmelt::to_string(c.ordering)
                  << ": exact=" << (c.exact ? "yes" : "no")
                  << " deviation=" << qmelt::format_double(c.exact_deviation);
        if (c.permutation_checked) {
            std::cout << " relabeled=" << (c.permutation ? "yes" : "no");
        }
        std::cout << '\n';
    }
    if (const auto ordering = report.satisfying_ordering()) {
        std::cout << "claim: confirmed (ordering " << qmelt::to_string(*ordering) << ")\n";
    } else {
        std::cout << "claim: not confirmed for any ordering\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qmelt: quantum-circuit regression experiments"};
    app.require_subcommand(1);

    SynthArgs synth;
    auto *synth_cmd = app.add_subcommand("synth-data", "Write a synthetic oxide dataset");
    synth_cmd->add_option("--n", synth.n, "Number of records (>= 10)");
    synth_cmd->add_option("--noise", synth.noise, "Gaussian noise std in degrees C");
    synth_cmd->add_option("--seed", synth.seed, "Generator seed");
    synth_cmd->add_option("--out", synth.out, "Output CSV")->required();

    TrainArgs train;
    auto *train_cmd = app.add_subcommand("train", "Fit one model on the full dataset");
    train_cmd->add_option("--dataset", train.dataset)->required();
    train_cmd->add_option("--config", train.config, "Model config (YAML)")->required();
    train_cmd->add_option("--out", train.out, "Output directory")->required();

    CvArgs cv;
    auto *cv_cmd = app.add_subcommand("cv", "Cross-validate one model");
    cv_cmd->add_option("--dataset", cv.dataset)->required();
    cv_cmd->add_option("--config", cv.config, "Model config (YAML)")->required();
    cv_cmd->add_option("--out", cv.out, "Output directory")->required();

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Cross-validate every cell of a grid");
    sweep_cmd->add_option("--dataset", sweep.dataset)->required();
    sweep_cmd->add_option("--config", sweep.config, "Grid config (YAML)")->required();
    sweep_cmd->add_option("--out", sweep.out, "Output directory")->required();

    ExpressArgs express;
    auto *express_cmd = app.add_subcommand("express", "Expressibility and entanglement scan");
    express_cmd->add_option("--config", express.config, "Ansatz grid config (YAML)");
    express_cmd->add_option("--ansatz", express.ansatzes, "Ansatz names such as linear/cx");
    express_cmd->add_option("--width", express.width);
    express_cmd->add_option("--depths", express.depths);
    express_cmd->add_option("--pairs", express.pairs, "Fidelity pairs");
    express_cmd->add_option("--bins", express.bins, "Histogram bins");
    express_cmd->add_option("--entropy-samples", express.entropy_samples);
    express_cmd->add_option("--seed", express.seed);
    express_cmd->add_option("--out", express.out, "Output directory")->required();

    ReduceArgs reduce;
    auto *reduce_cmd = app.add_subcommand("reduce-check", "Test an entangler's reduced form");
    reduce_cmd->add_option("--entangler", reduce.entangler, "full or circular4");
    reduce_cmd->add_option("--width", reduce.width);
    reduce_cmd->add_option("--gate", reduce.gate, "cx or cz");
    reduce_cmd->add_option("--out", reduce.out, "Output CSV");

    BaselineArgs baseline;
    auto *baseline_cmd = app.add_subcommand("baseline", "Cross-validate classical MLPs");
    baseline_cmd->add_option("--dataset", baseline.dataset)->required();
    baseline_cmd->add_option("--arch", baseline.archs, "Layer sizes such as 5-5-1");
    baseline_cmd->add_option("--l2", baseline.l2, "L2 weight(s)");
    baseline_cmd->add_option("--learning-rate", baseline.learning_rate);
    baseline_cmd->add_option("--epochs", baseline.epochs);
    baseline_cmd->add_option("--folds", baseline.folds);
    baseline_cmd->add_option("--fold-seed", baseline.fold_seed);
    baseline_cmd->add_option("--seed", baseline.seed);
    baseline_cmd->add_option("--out", baseline.out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*synth_cmd) {
            return run_synth(synth);
        }
        if (*train_cmd) {
            return run_train(train);
        }
        if (*cv_cmd) {
            return run_cv(cv);
        }
        if (*sweep_cmd) {
            return run_sweep_cmd(sweep);
        }
        if (*express_cmd) {
            return run_express(express, *express_cmd);
        }
        if (*reduce_cmd) {
            return run_reduce(reduce);
        }
        if (*baseline_cmd) {
            return run_baseline(baseline);
        }
    } catch (const qmelt::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const qmelt::InvalidArgument &e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const qmelt::ResourceLimit &e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kUsage;
    } catch (const qmelt::ParseError &e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kData;
    } catch (const qmelt::DegenerateFeature &e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kData;
    } catch (const qmelt::IoError &e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kData;
    } catch (const qmelt::NumericalError &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumerical;
    }
    return kUsage;
}
