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
 * Machine-readable result tables (CSV) and plot-ready series files.
 *
 * Numbers are written in shortest round-trip form, so a table re-parses to
 * exactly the values that produced it and identical runs produce identical
 * bytes.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "qmelt/expressibility.hpp"
#include "qmelt/sweep.hpp"

namespace qmelt {

/// One cross-validated cell, flattened. Fields that do not apply to the
/// model kind are empty strings / zero.
struct ResultRow {
    std::size_t cell{0};
    std::string key;
    std::string model;  // qnn | mlp | mean
    std::string layout;
    std::string angle_map;
    std::size_t width{0};
    std::string entangler;
    std::string gate;
    std::size_t depth{0};
    std::string arch;
    double l2_weight{0.0};
    std::size_t n_params{0};
    double train_rmse_scaled{0.0};
    double test_rmse_scaled{0.0};
    double train_rmse_c{0.0};
    double test_rmse_c{0.0};
    std::size_t k{0};
    std::uint64_t fold_seed{0};
    std::uint64_t base_seed{0};
    std::string status;  // "ok" or "failed: <reason>"

    friend bool operator==(const ResultRow &, const ResultRow &) = default;
};

ResultRow to_row(std::size_t cell, const SweepCell &sweep_cell, const CvSettings &settings);

/// Curve name a row belongs to: the key with depth (QNN) or arch (MLP) removed.
std::string series_name(const ResultRow &row);

/// Appends rows to a CSV file as they arrive (header written on open).
class ResultTableWriter {
  public:
    explicit ResultTableWriter(const std::filesystem::path &path);
    void append(const ResultRow &row);

  private:
    std::ofstream out_;
    std::filesystem::path path_;
};

void write_result_table(const std::vector<ResultRow> &rows, const std::filesystem::path &path);
std::vector<ResultRow> read_result_table(const std::filesystem::path &path);

/// series,n_params,train_rmse_c,test_rmse_c sorted by (series, n_params).
void write_rmse_series(const std::vector<ResultRow> &rows, const std::filesystem::path &path);

/// key,fold,n_train,n_test,train_rmse_scaled,test_rmse_scaled,seed
void write_fold_table(const std::vector<CvResult> &results, const std::filesystem::path &path);

struct ExpressRow {
    std::string ansatz;  // "<entangler>-<gate>"
    std::string entangler;
    std::string gate;
    std::size_t width{0};
    std::size_t depth{0};
    double kl_divergence{0.0};
    double mean_entanglement_entropy{0.0};
    std::size_t n_pairs{0};
    std::size_t n_bins{0};
    std::size_t entropy_samples{0};
    std::uint64_t seed{0};

    friend bool operator==(const ExpressRow &, const ExpressRow &) = default;
};

ExpressRow to_row(const ExpressibilityReport &report);

void write_express_table(const std::vector<ExpressRow> &rows, const std::filesystem::path &path);
std::vector<ExpressRow> read_express_table(const std::filesystem::path &path);

/// kl_series.csv (ansatz,depth,kl) and entropy_series.csv (ansatz,depth,entropy)
/// in `dir`, sorted by (ansatz, depth).
void write_express_series(const std::vector<ExpressRow> &rows, const std::filesystem::path &dir);

/**
 * Writes results.csv, folds.csv and series.csv under `dir` (created if
 * needed). Throws InvalidArgument for an empty input and IoError when a file
 * cannot be written.
 */
void emit_report(const std::vector<SweepCell> &cells, const CvSettings &settings,
                 const std::filesystem::path &dir);
void emit_report(const std::vector<ExpressibilityReport> &reports,
                 const std::filesystem::path &dir);

} // namespace qmelt
