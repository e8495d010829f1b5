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
 * Dataset container, CSV ingestion and the synthetic melting-point generator.
 *
 * CSV header (any column order):
 *   material_id,formation_energy_per_atom,band_gap,density,cati_anio_ratio,
 *   dist_from_o,melting_point_c
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "qmelt/features.hpp"

namespace qmelt {

inline constexpr std::string_view kMaterialIdColumn = "material_id";
inline constexpr std::string_view kMeltingPointColumn = "melting_point_c";

struct Dataset {
    std::vector<FeatureRecord> records;
    std::string provenance;  // "file:<path>" or "synthetic(seed=...)"

    [[nodiscard]] std::size_t size() const { return records.size(); }
};

/// Throws ParseError naming the row/column for missing or unknown columns,
/// non-numeric cells, wrong cell counts and duplicate material ids.
Dataset parse_dataset(std::istream &in, const std::string &source_name);
Dataset load_dataset(const std::filesystem::path &path);

/// Writes the canonical header and shortest round-trip numbers.
void write_dataset(const Dataset &dataset, std::ostream &out);
void save_dataset(const Dataset &dataset, const std::filesystem::path &path);

/**
 * @name Synthetic generator
 *
 * Features are drawn uniformly from:
 *   formation_energy_per_atom [-4, -1] eV/atom, band_gap [0, 8] eV,
 *   density [2, 12] g/cm^3, cati_anio_ratio [0.4, 1.0], dist_from_o [1.6, 2.6] A.
 * With each mapped onto [0, 1] (u_fe = (-E_f - 1)/3, u_bg = gap/8,
 * u_rho = (rho - 2)/10, u_r = (r - 0.4)/0.6, u_o = (d - 1.6)/1.0):
 *
 *   g = 0.30 u_fe + 0.15 u_bg + 0.15 sqrt(u_rho) + 0.10 (1 - u_o) + 0.30 u_fe u_r
 *   T = 500 + 2900 g   (degrees C, so T lies in [500, 3400])
 *
 * Gaussian noise of `noise_std` degrees is added and the result is clamped to
 * [500, 3400]; with zero noise the clamp is inactive.
 */
///@{
inline constexpr double kSyntheticMinCelsius = 500.0;
inline constexpr double kSyntheticMaxCelsius = 3400.0;

double synthetic_melting_point(const Features &features);

/// Throws InvalidArgument for n < 10 or negative noise.
Dataset generate_synthetic_dataset(std::size_t n, double noise_std, std::uint64_t seed);
///@}

} // namespace qmelt
