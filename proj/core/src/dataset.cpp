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

#include "qmelt/dataset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "qmelt/error.hpp"
#include "qmelt/number_format.hpp"
#include "qmelt/rng.hpp"

namespace qmelt {

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

} // namespace

Dataset parse_dataset(std::istream &in, const std::string &source_name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(source_name + ": empty file");
    }
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        line.erase(0, 3);  // UTF-8 BOM
    }
    const auto header = split_csv_line(trim(line));

    std::optional<std::size_t> id_col;
    std::optional<std::size_t> target_col;
    std::array<std::optional<std::size_t>, kFeatureCount> feature_cols;
    for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string name = trim(header[c]);
        bool known = false;
        if (name == kMaterialIdColumn) {
            id_col = c;
            known = true;
        } else if (name == kMeltingPointColumn) {
            target_col = c;
            known = true;
        }
        for (std::size_t j = 0; j < kFeatureCount; ++j) {
            if (name == kFeatureNames[j]) {
                feature_cols[j] = c;
                known = true;
            }
        }
        if (!known) {
            throw ParseError(source_name + ": unknown column '" + name + "'");
        }
    }
    if (!id_col) {
        throw ParseError(source_name + ": missing column '" + std::string(kMaterialIdColumn) + "'");
    }
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
        if (!feature_cols[j]) {
            throw ParseError(source_name + ": missing column '" + std::string(kFeatureNames[j]) +
                             "'");
        }
    }
    if (!target_col) {
        throw ParseError(source_name + ": missing column '" + std::string(kMeltingPointColumn) +
                         "'");
    }

    Dataset dataset;
    dataset.provenance = "file:" + source_name;
    std::unordered_set<std::string> seen;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw ParseError(source_name + ": row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        }
        auto number = [&](std::size_t col) {
            try {
                const double v = parse_double(cells[col]);
                if (!std::isfinite(v)) {
                    throw std::invalid_argument("non-finite");
                }
                return v;
            } catch (const std::invalid_argument &) {
                throw ParseError(source_name + ": row " + std::to_string(row) + " column '" +
                                 trim(header[col]) + "': non-numeric value '" + cells[col] +
                                 "'");
            }
        };
        FeatureRecord record;
        record.material_id = trim(cells[*id_col]);
        if (record.material_id.empty()) {
            throw ParseError(source_name + ": row " + std::to_string(row) +
                             " has an empty material_id");
        }
        if (!seen.insert(record.material_id).second) {
            throw ParseError(source_name + ": row " + std::to_string(row) +
                             ": duplicate material_id '" + record.material_id + "'");
        }
        for (std::size_t j = 0; j < kFeatureCount; ++j) {
            record.features[j] = number(*feature_cols[j]);
        }
        record.melting_point_c = number(*target_col);
        dataset.records.push_back(std::move(record));
    }
    return dataset;
}

Dataset load_dataset(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open dataset '" + path.string() + "'");
    }
    return parse_dataset(in, path.string());
}

void write_dataset(const Dataset &dataset, std::ostream &out) {
    out << kMaterialIdColumn;
    for (const auto name : kFeatureNames) {
        out << ',' << name;
    }
    out << ',' << kMeltingPointColumn << '\n';
    for (const FeatureRecord &r : dataset.records) {
        out << r.material_id;
        for (const double v : r.features) {
            out << ',' << format_double(v);
        }
        out << ',' << format_double(r.melting_point_c) << '\n';
    }
}

void save_dataset(const Dataset &dataset, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write dataset '" + path.string() + "'");
    }
    write_dataset(dataset, out);
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

double synthetic_melting_point(const Features &f) {
    const double u_fe = (-f[0] - 1.0) / 3.0;
    const double u_bg = f[1] / 8.0;
    const double u_rho = (f[2] - 2.0) / 10.0;
    const double u_r = (f[3] - 0.4) / 0.6;
    const double u_o = (f[4] - 1.6) / 1.0;
    const double g = 0.30 * u_fe + 0.15 * u_bg + 0.15 * std::sqrt(std::max(u_rho, 0.0)) +
                     0.10 * (1.0 - u_o) + 0.30 * u_fe * u_r;
    return kSyntheticMinCelsius + (kSyntheticMaxCelsius - kSyntheticMinCelsius) * g;
}

Dataset generate_synthetic_dataset(std::size_t n, double noise_std, std::uint64_t seed) {
    if (n < 10) {
        throw InvalidArgument("synthetic dataset needs n >= 10");
    }
    if (!(noise_std >= 0.0)) {
        throw InvalidArgument("noise_std must be >= 0");
    }
    Rng rng(seed);
    Dataset dataset;
    dataset.provenance = "synthetic(seed=" + std::to_string(seed) +
                         ",noise=" + format_double(noise_std) + ")";
    dataset.records.reserve(n);
    const std::size_t digits = std::to_string(n).size();
    for (std::size_t i = 0; i < n; ++i) {
        FeatureRecord r;
        std::string index = std::to_string(i + 1);
        r.material_id = "SYN-" + std::string(digits - index.size(), '0') + index;
        r.features = {rng.uniform(-4.0, -1.0), rng.uniform(0.0, 8.0), rng.uniform(2.0, 12.0),
                      rng.uniform(0.4, 1.0), rng.uniform(1.6, 2.6)};
        const double noise = rng.normal();  // always drawn: noise-free data shares features
        r.melting_point_c = synthetic_melting_point(r.features);
        if (noise_std > 0.0) {
            r.melting_point_c = std::clamp(r.melting_point_c + noise_std * noise,
                                           kSyntheticMinCelsius, kSyntheticMaxCelsius);
        }
        dataset.records.push_back(std::move(r));
    }
    return dataset;
}

} // namespace qmelt
