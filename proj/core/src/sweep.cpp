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

#include "qmelt/sweep.hpp"

#include "qmelt/error.hpp"

namespace qmelt {

std::vector<ModelConfig> expand_grid(const SweepGrid &grid) {
    std::vector<ModelConfig> cells;
    if (grid.qnn) {
        const QnnGrid &g = *grid.qnn;
        for (const auto layout : g.layouts) {
            for (const auto map : g.angle_maps) {
                for (const auto entangler : g.entanglers) {
                    for (const auto gate : g.gates) {
                        for (const auto depth : g.depths) {
                            QnnConfig c;
                            c.encoder = {layout, map};
                            c.ansatz = {qubit_count(layout), depth, entangler, gate};
                            c.optimizer = g.optimizer;
                            c.restarts = g.restarts;
                            cells.emplace_back(c);
                        }
                    }
                }
            }
        }
    }
    if (grid.mlp) {
        for (const auto &arch : grid.mlp->archs) {
            for (const double l2 : grid.mlp->l2_weights) {
                MlpConfig c;
                c.arch = arch;
                c.training = grid.mlp->training;
                c.training.l2_weight = l2;
                cells.emplace_back(c);
            }
        }
    }
    if (grid.include_mean) {
        cells.emplace_back(MeanConfig{});
    }
    return cells;
}

std::vector<SweepCell> run_sweep(const Dataset &dataset, const std::vector<ModelConfig> &cells,
                                 const CvSettings &settings, const CellCallback &on_cell) {
    if (cells.empty()) {
        throw InvalidArgument("sweep grid is empty");
    }
    std::vector<SweepCell> out;
    out.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        SweepCell cell{cells[i], std::nullopt, {}};
        try {
            cell.result = run_cross_validation(dataset, cells[i], settings);
        } catch (const std::exception &e) {
            cell.error = e.what();
        }
        if (on_cell) {
            on_cell(i, cell);
        }
        out.push_back(std::move(cell));
    }
    return out;
}

} // namespace qmelt
