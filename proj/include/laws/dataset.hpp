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
#include <vector>

#include <Eigen/Dense>

#include "laws/state_vector.hpp"

namespace laws {

/// One labelled example. \p features is the normalized amplitude vector.
struct Sample {
    Eigen::Vector4d features;
    double label = 1.0; ///< -1 or +1
};

struct Dataset {
    std::vector<Sample> samples;
    std::vector<std::size_t> train;
    std::vector<std::size_t> validation;
};

/// Padding appended to the two kept features before normalization.
inline constexpr double kFeaturePad0 = 0.3;
inline constexpr double kFeaturePad1 = 0.0;

/// Reads "f1,f2,f3,f4,label" rows (header optional, labels {0,1} or {-1,1},
/// '#' comment lines skipped),
/// keeps f1 and f2, pads and L2-normalizes, shuffles with \p seed and splits.
/// Throws IngestionError with the line number for malformed rows.
[[nodiscard]] Dataset parse_iris(std::istream &in, std::uint64_t seed,
                                 double train_fraction = 0.75);
[[nodiscard]] Dataset load_iris(const std::filesystem::path &path, std::uint64_t seed,
                                double train_fraction = 0.75);

/// Two-qubit amplitude encoding of a normalized 4-vector.
[[nodiscard]] StateVector encode_amplitudes(const Eigen::Vector4d &features);

} // namespace laws
