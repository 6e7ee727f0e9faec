// Copyright 2026 The laws-vqa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "laws/classifier.hpp"
#include "laws/dataset.hpp"
#include "laws/differentiation.hpp"
#include "laws/objective.hpp"
#include "laws/optimizers.hpp"

namespace laws {

/// Metrics logged after each iteration (iteration 0 is the starting point).
struct TraceRecord {
    int iteration = 0;
    double cost = 0.0;
    double grad_norm = 0.0;
    double wall_ms = 0.0;
    std::vector<std::pair<std::string, double>> extra;
};

struct ExperimentResult {
    std::string experiment;
    std::string optimizer;
    std::uint64_t seed = 0;
    int iterations = 0;
    OptimizerConfig config;
    std::vector<TraceRecord> trace;
    ParameterVector final_theta;
    bool aborted = false;
    std::string abort_reason;
};

/// Adds experiment-specific columns to a record after cost and gradient norm.
using MetricsHook = std::function<void(const ParameterVector &, TraceRecord &)>;

/// Generic driver: logs the starting point, then \p iterations optimizer steps.
/// A NumericError ends the run early with aborted set and the partial trace kept.
[[nodiscard]] ExperimentResult run_optimization(const Objective &objective,
                                                std::string_view optimizer,
                                                const OptimizerConfig &config,
                                                ParameterVector theta0, int iterations,
                                                std::uint64_t seed, const MetricsHook &hook = {});

/// theta_0 uniform in [0, 2pi)^n from the experiment seed; shared by every
/// optimizer run with the same seed.
[[nodiscard]] ParameterVector initial_angles(std::size_t n, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultCircuitSeed = 8;
inline constexpr double kH2GroundEnergy = -1.1361894;
inline constexpr double kH2EnergyGate = 5e-4;

/// Z0 Z1 + Z1 Z2 on three qubits.
[[nodiscard]] PauliSumHamiltonian random_pqc_observable();

[[nodiscard]] ExperimentResult run_random_pqc(std::string_view optimizer,
                                              const OptimizerConfig &config, std::uint64_t seed,
                                              int iterations = 400,
                                              std::uint64_t circuit_seed = kDefaultCircuitSeed);

/// Loads the H2 Hamiltonian and rejects it unless its exact ground energy is
/// within 5e-4 of -1.1361894 Ha.
[[nodiscard]] PauliSumHamiltonian load_h2_hamiltonian(const std::filesystem::path &path);

/// VQE from Hartree-Fock (theta = 0) on the shipped ansatz.
[[nodiscard]] ExperimentResult run_h2_vqe(std::string_view optimizer,
                                          const OptimizerConfig &config, std::uint64_t seed,
                                          int iterations, const PauliSumHamiltonian &hamiltonian);

/// Trains the classifier; records acc_train and acc_val per iteration.
/// Angles start from initial_angles(seed), the bias at 0.
[[nodiscard]] ExperimentResult run_iris_classifier(std::string_view optimizer,
                                                   const OptimizerConfig &config,
                                                   std::uint64_t seed, int iterations,
                                                   const Dataset &data,
                                                   std::size_t batch_size = 5);

struct BpScanConfig {
    std::vector<int> qubits{2, 4, 6, 8};
    int samples = 200;
    /// Layers per qubit of the layered random circuit.
    int depth_factor = 5;
};

[[nodiscard]] std::vector<BpRow> run_bp_scan(const BpScanConfig &config, std::uint64_t seed,
                                             unsigned threads = 1);

/// Directory holding the shipped Hamiltonian and dataset. Honors LAWS_VQA_DATA.
[[nodiscard]] std::filesystem::path default_data_dir();

} // namespace laws
