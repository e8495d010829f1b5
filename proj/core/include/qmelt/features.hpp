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
 * Feature records, training-set scaling, target scaling and the
 * feature-to-rotation-angle maps used by the encoders.
 */

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmelt/circuit_model.hpp"

namespace qmelt {

inline constexpr std::size_t kFeatureCount = 5;

using Features = std::array<double, kFeatureCount>;

/// Column names in dataset order.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "formation_energy_per_atom", "band_gap", "density", "cati_anio_ratio", "dist_from_o"};

struct FeatureRecord {
    std::string material_id;
    Features features{};  // eV/atom, eV, g/cm^3, dimensionless, angstrom
    double melting_point_c{0.0};

    friend bool operator==(const FeatureRecord &, const FeatureRecord &) = default;
};

/**
 * @brief Standardize-then-rescale transform fitted on a training set.
 *
 * x -> ((x - mean) / std) / max_abs, where std is the population standard
 * deviation and max_abs the largest |standardized value| on the fitting set.
 * No clipping is applied to data outside the fitting range.
 */
struct Scaler {
    Features mean{};
    Features std{};
    Features max_abs{};

    [[nodiscard]] Features transform(const Features &raw) const;
    [[nodiscard]] Features inverse(const Features &scaled) const;

    friend bool operator==(const Scaler &, const Scaler &) = default;
};

/// Throws InvalidArgument for fewer than two records and DegenerateFeature
/// (naming the column) for a constant feature.
Scaler fit_scaler(std::span<const FeatureRecord> records);
Scaler fit_scaler(std::span<const Features> rows);

inline Features apply_scaler(const Scaler &scaler, const Features &raw) {
    return scaler.transform(raw);
}

/// Rotation angle for a scaled feature: pi*x, or arctan(x) + pi/2.
double angle(AngleMap map, double x);

inline constexpr double kTargetScaleCelsius = 3500.0;

inline double scale_target(double celsius) { return celsius / kTargetScaleCelsius; }
inline double unscale_target(double scaled) { return scaled * kTargetScaleCelsius; }

/// Per-qubit encoder angles. Ten-qubit layouts interleave: feature i drives
/// qubits 2i and 2i+1 (TenXX2 puts x^2 on the odd qubit).
std::vector<double> compile_angles(EncoderLayout layout, AngleMap map,
                                   const Features &scaled);

} // namespace qmelt
