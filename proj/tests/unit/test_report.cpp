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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmelt/error.hpp"
#include "qmelt/report.hpp"

namespace qmelt {
namespace {

namespace fs = std::filesystem;

class ReportTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qmelt_report_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    static std::string slurp(const fs::path &p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

std::vector<SweepCell> sample_cells() {
    const Dataset d = generate_synthetic_dataset(20, 100.0, 1);
    QnnConfig q;
    q.optimizer.max_iterations = 2;
    MlpConfig m;
    m.arch = parse_architecture("5-2-1");
    m.training.epochs = 20;
    m.training.l2_weight = 1e-5;
    return run_sweep(d, {q, m, MeanConfig{}}, CvSettings{4, 3, 5});
}

TEST_F(ReportTest, ResultTableRoundTrips) {
    const auto cells = sample_cells();
    const CvSettings s{4, 3, 5};
    emit_report(cells, s, dir_);
    const auto rows = read_result_table(dir_ / "results.csv");
    ASSERT_EQ(rows.size(), 3U);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(rows[i], to_row(i, cells[i], s));
    }
    EXPECT_EQ(rows[0].model, "qnn");
    EXPECT_EQ(rows[0].n_params, 5U);
    EXPECT_EQ(rows[1].arch, "5-2-1");
    EXPECT_EQ(rows[1].l2_weight, 1e-5);
    EXPECT_EQ(rows[2].model, "mean");
    EXPECT_EQ(rows[2].fold_seed, 3U);
    EXPECT_EQ(rows[2].base_seed, 5U);
    EXPECT_EQ(rows[0].test_rmse_scaled, cells[0].result->mean_test_rmse_scaled);
}

TEST_F(ReportTest, FoldAndSeriesFiles) {
    emit_report(sample_cells(), CvSettings{4, 3, 5}, dir_);
    const std::string folds = slurp(dir_ / "folds.csv");
    EXPECT_EQ(folds.rfind("key,fold,n_train,n_test,train_rmse_scaled,test_rmse_scaled,seed\n", 0), 0U);
    EXPECT_EQ(std::count(folds.begin(), folds.end(), '\n'), 1 + 3 * 4);
    const std::string series = slurp(dir_ / "series.csv");
    EXPECT_EQ(series.rfind("series,n_params,train_rmse_c,test_rmse_c\n", 0), 0U);
    EXPECT_NE(series.find("qnn/5x/arctan/linear/cx,5,"), std::string::npos);
    EXPECT_NE(series.find("mlp/l2=1e-05,15,"), std::string::npos);
}

TEST_F(ReportTest, FailedCellsAreMarked) {
    SweepCell failed{MeanConfig{}, std::nullopt, "bad, broken"};
    emit_report({failed}, CvSettings{}, dir_);
    const auto rows = read_result_table(dir_ / "results.csv");
    ASSERT_EQ(rows.size(), 1U);
    EXPECT_EQ(rows[0].status, "failed: bad; broken");
}

TEST_F(ReportTest, ExpressTableSchemaAndRoundTrip) {
    std::vector<ExpressibilityReport> reports;
    for (const auto kind : {EntanglerKind::Linear, EntanglerKind::Full}) {
        reports.push_back(evaluate_expressibility({5, 1, kind, EntanglingGate::CX}, {200, 20, 30, 4}));
    }
    emit_report(reports, dir_);
    const auto rows = read_express_table(dir_ / "expressibility.csv");
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(rows[0], to_row(reports[0]));
    EXPECT_EQ(rows[1].ansatz, "full-cx");
    const std::string kl = slurp(dir_ / "kl_series.csv");
    EXPECT_EQ(kl.rfind("ansatz,width,depth,kl\n", 0), 0U);
    const std::string entropy = slurp(dir_ / "entropy_series.csv");
    EXPECT_EQ(entropy.rfind("ansatz,width,depth,entropy\n", 0), 0U);
}

TEST_F(ReportTest, EmptyInputIsRejected) {
    EXPECT_THROW(emit_report(std::vector<SweepCell>{}, CvSettings{}, dir_), InvalidArgument);
    EXPECT_THROW(emit_report(std::vector<ExpressibilityReport>{}, dir_), InvalidArgument);
}

TEST_F(ReportTest, UnwritablePathIsAnIoError) {
    const fs::path blocker = dir_ / "file";
    std::ofstream(blocker) << "x";
    SweepCell cell{MeanConfig{}, std::nullopt, "x"};
    EXPECT_THROW(emit_report({cell}, CvSettings{}, blocker / "sub"), IoError);
    EXPECT_THROW(write_result_table({}, blocker / "results.csv"), IoError);
}

TEST_F(ReportTest, ReaderRejectsWrongHeader) {
    std::ofstream(dir_ / "bad.csv") << "a,b\n1,2\n";
    EXPECT_THROW(read_result_table(dir_ / "bad.csv"), ParseError);
}

} // namespace
} // namespace qmelt
