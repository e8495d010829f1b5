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
 * Experiment grids: expansion into model configs and sequential execution
 * with per-cell error isolation.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmelt/cross_validation.hpp"

namespace qmelt {

struct QnnGrid {
    std::vector<EncoderLayout> layouts{EncoderLayout::FiveX};
    std::vector<AngleMap> angle_maps{AngleMap::ArctanShift};
    std::vector<EntanglerKind> entanglers{EntanglerKind::Linear};
    std::vector<EntanglingGate> gates{EntanglingGate::CX};
    std::vector<std::size_t> depths{1};
    OptimizerSettings optimizer;
    std::size_t restarts{1};
};

struct MlpGrid {
    std::vector<MlpArchitecture> archs;
    std::vector<double> l2_weights{1e-4};
    TrainingConfig training;
};

struct SweepGrid {
    std::optional<QnnGrid> qnn;
    std::optional<MlpGrid> mlp;
    bool include_mean{false};
};

/// Cartesian product in declaration order (layout, angle map, entangler,
/// gate, depth; then arch, l2). Widths follow from the layout.
std::vector<ModelConfig> expand_grid(const SweepGrid &grid);

struct SweepCell {
    ModelConfig config;
    std::optional<CvResult> result;
    std::string error;  // set when the cell failed
};

using CellCallback = std::function<void(std::size_t index, const SweepCell &cell)>;

/// Cross-validates every config; a failing cell records its error and the
/// sweep continues. `on_cell` (if set) is called as each cell finishes.
/// Throws InvalidArgument for an empty grid.
std::vector<SweepCell> run_sweep(const Dataset &dataset, const std::vector<ModelConfig> &cells,
                                 const CvSettings &settings, const CellCallback &on_cell = {});

} // namespace qmelt
