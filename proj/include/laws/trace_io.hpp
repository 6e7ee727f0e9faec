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
#include <string>
#include <vector>

#include "laws/differentiation.hpp"
#include "laws/experiments.hpp"

namespace laws {

/// "iteration,cost,grad_norm,wall_ms[,extra...]" with one row per record.
/// Numbers use 17 significant digits so reruns compare byte for byte.
[[nodiscard]] std::string format_trace_csv(const std::vector<TraceRecord> &trace);

/// "n_qubits,n_samples,grad_mean,grad_variance,stderr".
[[nodiscard]] std::string format_bp_csv(const std::vector<BpRow> &rows);

/// JSON sidecar: experiment, optimizer, seed, abort state, final theta and
/// the resolved configuration text.
[[nodiscard]] std::string format_metadata(const ExperimentResult &result,
                                          const std::string &config_text);

/// JSON sidecar for a bp-scan table: seed, fitted slope and p-value, config.
[[nodiscard]] std::string format_bp_metadata(std::uint64_t seed, const DecayFit &fit,
                                             const std::string &config_text);

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never observe a partial file. Throws IoError.
void write_file_atomic(const std::filesystem::path &path, const std::string &content);

[[nodiscard]] std::string provenance();

} // namespace laws
