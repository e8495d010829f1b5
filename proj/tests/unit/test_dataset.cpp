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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "qmelt/dataset.hpp"
#include "qmelt/error.hpp"

namespace qmelt {
namespace {

constexpr const char *kHeader =
    "material_id,formation_energy_per_atom,band_gap,density,cati_anio_ratio,dist_from_o,"
    "melting_point_c\n";

Dataset parse(const std::string &text) {
    std::istringstream in(text);
    return parse_dataset(in, "test.csv");
}

std::string error_of(const std::string &text) {
    try {
        (void)parse(text);
    } catch (const ParseError &e) {
        return e.what();
    }
    return {};
}

TEST(Dataset, ParsesThreeRows) {
    const Dataset d = parse(std::string(kHeader) +
                            "MgO,-3.0,4.5,3.58,1.0,2.1,2852\n"
                            "Al2O3,-3.4,5.9,3.95,0.667,1.9,2072\n"
                            "SiO2,-3.0,5.7,2.65,0.5,1.6,1713\n");
    ASSERT_EQ(d.size(), 3U);
    EXPECT_EQ(d.records[0].material_id, "MgO");
    EXPECT_DOUBLE_EQ(d.records[1].features[3], 0.667);
    EXPECT_DOUBLE_EQ(d.records[2].melting_point_c, 1713.0);
}

TEST(Dataset, AcceptsAnyColumnOrder) {
    const Dataset d = parse(
        "melting_point_c,dist_from_o,cati_anio_ratio,density,band_gap,formation_energy_per_atom,"
        "material_id\n2852,2.1,1.0,3.58,4.5,-3.0,MgO\n");
    ASSERT_EQ(d.size(), 1U);
    EXPECT_DOUBLE_EQ(d.records[0].features[0], -3.0);
    EXPECT_DOUBLE_EQ(d.records[0].melting_point_c, 2852.0);
}

TEST(Dataset, MissingColumnIsNamed) {
    const std::string msg = error_of(
        "material_id,formation_energy_per_atom,density,cati_anio_ratio,dist_from_o,"
        "melting_point_c\nMgO,-3.0,3.58,1.0,2.1,2852\n");
    EXPECT_NE(msg.find("band_gap"), std::string::npos) << msg;
}

TEST(Dataset, DuplicateIdIsNamed) {
    const std::string msg = error_of(std::string(kHeader) + "MgO,-3,4,3,1,2,2852\nMgO,-3,4,3,1,2,2852\n");
    EXPECT_NE(msg.find("MgO"), std::string::npos) << msg;
    EXPECT_NE(msg.find("duplicate"), std::string::npos) << msg;
}

TEST(Dataset, NonNumericCellNamesRowAndColumn) {
    const std::string msg = error_of(std::string(kHeader) + "MgO,-3,abc,3,1,2,2852\n");
    EXPECT_NE(msg.find("row 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("band_gap"), std::string::npos) << msg;
}

TEST(Dataset, RaggedRowsAndUnknownColumnsFail) {
    EXPECT_FALSE(error_of(std::string(kHeader) + "MgO,-3,4,3,1,2\n").empty());
    EXPECT_FALSE(error_of(std::string("extra,") + kHeader).empty());
    EXPECT_FALSE(error_of("").empty());
}

TEST(Dataset, MissingFileIsAnIoError) {
    EXPECT_THROW(load_dataset("/nonexistent/dir/data.csv"), IoError);
}

TEST(Dataset, WriteThenParseIsExact) {
    const Dataset d = generate_synthetic_dataset(30, 80.0, 5);
    std::ostringstream out;
    write_dataset(d, out);
    const Dataset back = parse(out.str());
    EXPECT_EQ(back.records, d.records);
}

TEST(Synthetic, DeterministicPerSeed) {
    EXPECT_EQ(generate_synthetic_dataset(70, 0.0, 3).records,
              generate_synthetic_dataset(70, 0.0, 3).records);
    EXPECT_NE(generate_synthetic_dataset(70, 0.0, 3).records,
              generate_synthetic_dataset(70, 0.0, 4).records);
}

TEST(Synthetic, NoiseFreeTargetsLieOnTheGenerator) {
    const Dataset d = generate_synthetic_dataset(70, 0.0, 12);
    for (const auto &r : d.records) {
        EXPECT_EQ(r.melting_point_c, synthetic_melting_point(r.features));
    }
}

TEST(Synthetic, NoiseKeepsFeaturesAndPerturbsTargets) {
    const Dataset clean = generate_synthetic_dataset(70, 0.0, 12);
    const Dataset noisy = generate_synthetic_dataset(70, 100.0, 12);
    double ss = 0.0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        EXPECT_EQ(clean.records[i].features, noisy.records[i].features);
        const double d = noisy.records[i].melting_point_c - clean.records[i].melting_point_c;
        ss += d * d;
    }
    const double rms = std::sqrt(ss / 70.0);
    EXPECT_GT(rms, 60.0);
    EXPECT_LT(rms, 140.0);
}

TEST(Synthetic, TargetsStayInDocumentedRange) {
    const Dataset d = generate_synthetic_dataset(10000, 300.0, 77);
    for (const auto &r : d.records) {
        EXPECT_GE(r.melting_point_c, kSyntheticMinCelsius);
        EXPECT_LE(r.melting_point_c, kSyntheticMaxCelsius);
    }
    const Dataset clean = generate_synthetic_dataset(10000, 0.0, 78);
    for (const auto &r : clean.records) {
        EXPECT_GE(r.melting_point_c, kSyntheticMinCelsius);
        EXPECT_LE(r.melting_point_c, kSyntheticMaxCelsius);
    }
}

TEST(Synthetic, GeneratorExtremes) {
    EXPECT_DOUBLE_EQ(synthetic_melting_point({-1.0, 0.0, 2.0, 0.4, 2.6}), 500.0);
    EXPECT_DOUBLE_EQ(synthetic_melting_point({-4.0, 8.0, 12.0, 1.0, 1.6}), 3400.0);
}

TEST(Synthetic, RejectsTinyOrNegativeNoise) {
    EXPECT_THROW(generate_synthetic_dataset(9, 0.0, 1), InvalidArgument);
    EXPECT_THROW(generate_synthetic_dataset(20, -1.0, 1), InvalidArgument);
    EXPECT_EQ(generate_synthetic_dataset(12, 0.0, 1).records[0].material_id, "SYN-01");
}

} // namespace
} // namespace qmelt
