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
 * Flat key-value run configurations (YAML maps of scalars and scalar lists).
 *
 * Every loader rejects unknown keys, and every config type has an echo that
 * reloads to the same values.
 */

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qmelt/cross_validation.hpp"
#include "qmelt/expressibility.hpp"
#include "qmelt/sweep.hpp"

namespace qmelt {

/// A single model plus the cross-validation settings it runs under.
struct RunConfig {
    ModelConfig model;
    CvSettings cv;
};

RunConfig parse_run_config(const std::string &text);
RunConfig load_run_config(const std::filesystem::path &path);
std::string echo_config(const RunConfig &config);

struct SweepConfig {
    SweepGrid grid;
    CvSettings cv;
};

SweepConfig parse_sweep_config(const std::string &text);
SweepConfig load_sweep_config(const std::filesystem::path &path);
std::string echo_config(const SweepConfig &config);

struct ExpressConfig {
    /// Every (entangler, gate) combination is evaluated at every depth.
    std::vector<std::pair<EntanglerKind, EntanglingGate>> ansatzes;
    std::size_t width{5};
    std::vector<std::size_t> depths{1};
    ExpressibilitySettings settings;

    [[nodiscard]] std::vector<AnsatzSpec> expand() const;
};

/// Parses "linear/cx" style ansatz names.
std::pair<EntanglerKind, EntanglingGate> parse_ansatz_name(const std::string &text);

ExpressConfig parse_express_config(const std::string &text);
ExpressConfig load_express_config(const std::filesystem::path &path);
std::string echo_config(const ExpressConfig &config);

} // namespace qmelt
