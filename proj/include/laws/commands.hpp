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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "laws/config.hpp"
#include "laws/experiments.hpp"

namespace laws {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitNumericAbort = 1,
    kExitConfig = 2,
    kExitIo = 3,
};

/// Worker cap from LAWS_VQA_THREADS, else the hardware concurrency.
/// A malformed value is a ConfigurationError.
[[nodiscard]] unsigned worker_threads();

/// Runs one optimization cell of \p config (not bp-scan).
[[nodiscard]] ExperimentResult run_experiment(const RunConfig &config, std::string_view optimizer,
                                              std::uint64_t seed);

/// Cost threshold used for iters_to_threshold: the configured value, or
/// ground energy + 1e-3 for h2-vqe. Empty for other experiments.
[[nodiscard]] std::optional<double> effective_threshold(const RunConfig &config);

/// First logged iteration whose cost is at or below \p threshold.
[[nodiscard]] std::optional<int> iterations_to_threshold(const std::vector<TraceRecord> &trace,
                                                         double threshold);

/// `<experiment>_<optimizer>_seed<seed>`; \p occurrence > 1 appends `_<n>`.
[[nodiscard]] std::string cell_stem(const RunConfig &config, std::string_view optimizer,
                                    std::uint64_t seed, int occurrence = 1);

/// Writes the trace CSV and JSON sidecar (or the variance table for bp-scan)
/// under output_dir. Returns kExitNumericAbort if the run aborted.
int cmd_run(const RunConfig &config, std::ostream &log);

/// One cell per (optimizer, seed) plus <experiment>_summary.csv; with
/// eta_sweep each optimizer is repeated per eta_grid entry and labelled
/// `name@eta=value`. Cells fan out over worker_threads() workers.
int cmd_compare(const RunConfig &config, std::ostream &log);

/// bp-scan table plus a sidecar holding the fitted log-variance slope.
int cmd_bp_scan(const RunConfig &config, std::ostream &log);

} // namespace laws
