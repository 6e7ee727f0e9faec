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
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laws/optimizers.hpp"
#include "laws/experiments.hpp"

namespace laws {

enum class ExperimentKind { RandomPqc, H2Vqe, Iris, BpScan };

[[nodiscard]] std::string_view experiment_name(ExperimentKind kind);
[[nodiscard]] ExperimentKind parse_experiment(std::string_view name);

/// Fully resolved settings for one CLI invocation.
struct RunConfig {
    ExperimentKind experiment = ExperimentKind::RandomPqc;
    std::string optimizer = "laws";
    OptimizerConfig optimizer_config;
    std::uint64_t seed = 1;
    /// Negative selects the experiment default (400, or 50 for iris).
    int iterations = -1;
    std::uint64_t circuit_seed = kDefaultCircuitSeed;
    std::filesystem::path hamiltonian;
    std::filesystem::path dataset;
    double train_fraction = 0.75;
    std::size_t batch_size = 5;
    std::vector<int> qubits{2, 4, 6, 8};
    int samples = 200;
    int depth_factor = 5;
    std::optional<double> threshold;
    std::vector<std::string> optimizers{"sgd", "qng", "laws"};
    std::vector<std::uint64_t> seeds{1};
    /// compare only: repeat every optimizer for each eta in eta_grid.
    bool eta_sweep = false;
    std::vector<double> eta_grid{0.1, 0.5, 1.0};
    std::filesystem::path output_dir = "results";

    [[nodiscard]] int resolved_iterations() const;
};

/// (key, value) pairs, in order; later entries win.
using ConfigOverrides = std::vector<std::pair<std::string, std::string>>;

/// Every key accepted in a config file or as a --key flag.
[[nodiscard]] std::vector<std::string> config_keys();

/// Parses the sectioned key-value format:
///
///     [experiment]
///     experiment = "h2-vqe"
///     seed = 3
///     [optimizer]
///     optimizer = "laws"
///     eta = 0.01
///     [output]
///     output_dir = "results"
///
/// Keys are unique across sections, so keys before the first header are
/// accepted too. Unknown keys, keys in the wrong section and malformed values
/// throw ConfigurationError naming the key.
void apply_config_text(RunConfig &config, std::istream &in);

/// Applies --key value overrides.
void apply_overrides(RunConfig &config, const ConfigOverrides &overrides);

/// Defaults, then \p file (if given), then \p overrides; validates the result.
/// A missing config file or referenced data file is a ConfigurationError.
[[nodiscard]] RunConfig parse_config(const std::optional<std::filesystem::path> &file,
                                     const ConfigOverrides &overrides);

/// Range checks and referenced-file existence. Throws ConfigurationError.
void validate(const RunConfig &config);

/// Key-value dump of \p config in the file format, readable by apply_config_text.
[[nodiscard]] std::string to_config_text(const RunConfig &config);

} // namespace laws
