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
 * Ansatz expressibility metrics.
 *
 * KL divergence (natural log) between the histogram of state-pair
 * fidelities under random parameters and the Haar fidelity distribution
 * P(F) = (N - 1)(1 - F)^(N - 2), N = 2^n; and the mean single-qubit
 * entanglement entropy (log2, so bounded by 1). Parameters are drawn
 * uniformly from [0, 2pi) and circuits start from |0...0> with no encoder.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qmelt/circuit_model.hpp"

namespace qmelt {

struct ExpressibilitySettings {
    std::size_t n_pairs{5000};
    std::size_t n_bins{75};
    std::size_t entropy_samples{1000};
    std::uint64_t seed{0};
};

struct ExpressibilityReport {
    AnsatzSpec ansatz;
    double kl_divergence{0.0};
    double mean_entanglement_entropy{0.0};
    std::size_t n_samples{0};  // fidelity pairs
    std::size_t n_bins{0};
    std::size_t entropy_samples{0};
    std::uint64_t seed{0};
};

/**
 * Fidelities between the states of `ansatz` for independent parameter
 * vectors. Pair p consumes 2P uniforms from Rng(seed): first vector, then
 * second. Draws do not depend on the ansatz beyond P, so ansatzes with equal
 * parameter counts see common random numbers.
 */
std::vector<double> sample_pair_fidelities(const Circuit &ansatz, std::size_t n_pairs,
                                           std::uint64_t seed);
std::vector<double> sample_pair_fidelities(const AnsatzSpec &ansatz, std::size_t n_pairs,
                                           std::uint64_t seed);

/// Haar probability mass of each uniform bin of [0, 1], from the survival
/// function (1 - F)^(N - 1) so the top bins do not underflow to zero.
std::vector<double> haar_bin_probabilities(std::size_t n_qubits, std::size_t n_bins);

/// sum p_i ln(p_i / q_i) over bins with samples. Needs >= 100 samples, all in
/// [0, 1] up to 1e-9 rounding.
double kl_divergence(std::span<const double> samples, std::size_t n_qubits,
                     std::size_t n_bins);

/// Mean over `n_samples` random parameter vectors and over all qubits of the
/// single-qubit entropy. Requires width >= 2.
double mean_entanglement_entropy(const Circuit &ansatz, std::size_t n_samples,
                                 std::uint64_t seed);
double mean_entanglement_entropy(const AnsatzSpec &ansatz, std::size_t n_samples,
                                 std::uint64_t seed);

/// Fidelities use `seed`; entropy samples use derive_seed(seed, "entropy").
ExpressibilityReport evaluate_expressibility(const AnsatzSpec &ansatz,
                                             const ExpressibilitySettings &settings);

} // namespace qmelt
