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

#include "oracles.hpp"
#include "qmelt/error.hpp"
#include "qmelt/reduction.hpp"

namespace qmelt {
namespace {

TEST(Reduction, CandidatesHaveExpectedGates) {
    const Circuit inverse = reduction_candidate(ReductionTarget::InverseLinear, 5, EntanglingGate::CX);
    ASSERT_EQ(inverse.gates().size(), 4U);
    EXPECT_EQ(inverse.gates().front(), Gate::cx(3, 4));
    EXPECT_EQ(inverse.gates().back(), Gate::cx(0, 1));
    const Circuit fanout = reduction_candidate(ReductionTarget::BottomFanout, 5, EntanglingGate::CX);
    ASSERT_EQ(fanout.gates().size(), 4U);
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(fanout.gates()[j], Gate::cx(4, j));
    }
}

TEST(Reduction, FullCollapsesToInverseLinear) {
    const ReductionReport r = check_reduction(EntanglerKind::Full, 5, EntanglingGate::CX);
    EXPECT_TRUE(r.confirmed());
    EXPECT_EQ(r.satisfying_ordering(), EntanglerOrdering::Canonical);
    EXPECT_EQ(r.checks.front().gate_count, 10U);
    EXPECT_EQ(r.candidate_gate_count, 4U);
    EXPECT_LT(r.checks.front().exact_deviation, 1e-12);
}

// Property: the identity is not special to five wires.
TEST(ReductionProperty, FullCollapsesAtEveryWidth) {
    for (std::size_t w = 2; w <= 8; ++w) {
        EXPECT_TRUE(check_reduction(EntanglerKind::Full, w, EntanglingGate::CX).checks.front().exact)
            << "width " << w;
    }
}

TEST(Reduction, Circular4FanoutNeedsQubitMajorOrderAndRelabeling) {
    const ReductionReport r = check_reduction(EntanglerKind::Circular4, 5, EntanglingGate::CX);
    EXPECT_TRUE(r.confirmed());
    EXPECT_EQ(r.satisfying_ordering(), EntanglerOrdering::QubitMajor);
    for (const auto &c : r.checks) {
        EXPECT_FALSE(c.exact);
        EXPECT_TRUE(c.permutation_checked);
    }
    // Confirm the relabeling with the dense oracle: U_entangler = P * U_fanout.
    const auto &qm = r.checks.back();
    ASSERT_TRUE(qm.permutation.has_value());
    const Circuit ent = build_entangler(EntanglerKind::Circular4, 5, EntanglingGate::CX,
                                        EntanglerOrdering::QubitMajor);
    const Circuit fan = reduction_candidate(ReductionTarget::BottomFanout, 5, EntanglingGate::CX);
    const auto ue = oracle::unitary(ent);
    const auto uf = oracle::unitary(fan);
    for (Eigen::Index row = 0; row < 32; ++row) {
        Eigen::Index mapped = 0;
        for (std::size_t q = 0; q < 5; ++q) {
            const auto bit = (row >> (4 - q)) & 1;
            mapped |= bit << (4 - (*qm.permutation)[q]);
        }
        EXPECT_LT((ue.row(mapped) - uf.row(row)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Reduction, CzVariantOfFullDoesNotCollapse) {
    EXPECT_FALSE(check_reduction(EntanglerKind::Full, 5, EntanglingGate::CZ).confirmed());
}

TEST(Reduction, UnclaimedKindsAndLimits) {
    EXPECT_THROW(check_reduction(EntanglerKind::Linear, 5, EntanglingGate::CX), InvalidArgument);
    EXPECT_THROW(check_reduction(EntanglerKind::Full, 11, EntanglingGate::CX), ResourceLimit);
    const ReductionReport wide = check_reduction(EntanglerKind::Circular4, 8, EntanglingGate::CX);
    for (const auto &c : wide.checks) {
        EXPECT_FALSE(c.permutation_checked);
    }
}

TEST(Reduction, TableHasOneRowPerOrdering) {
    const auto path = std::filesystem::temp_directory_path() / "qmelt_reduction_table.csv";
    write_reduction_table(check_reduction(EntanglerKind::Circular4, 5, EntanglingGate::CX), path);
    std::ifstream in(path);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    ASSERT_EQ(lines.size(), 6U);
    EXPECT_NE(lines.back().find("qubit-major"), std::string::npos);
    EXPECT_EQ(lines.back().substr(lines.back().size() - 4), "true");
    std::filesystem::remove(path);
    EXPECT_THROW(write_reduction_table({}, "/nonexistent/dir/r.csv"), IoError);
}

} // namespace
} // namespace qmelt
