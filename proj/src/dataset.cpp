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

#include "laws/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "laws/errors.hpp"
#include "laws/rng.hpp"

namespace laws {

namespace {

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        const auto first = field.find_first_not_of(" \t\r");
        const auto last = field.find_last_not_of(" \t\r");
        fields.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
    }
    return fields;
}

bool parse_double(const std::string &text, double &out) {
    try {
        std::size_t used = 0;
        out = std::stod(text, &used);
        return used == text.size() && std::isfinite(out);
    }
    catch (const std::exception &) {
        return false;
    }
}

} // namespace

Dataset parse_iris(std::istream &in, std::uint64_t seed, double train_fraction) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw ConfigurationError("train_fraction must lie in (0, 1)");
    }
    Dataset data;
    std::string line;
    std::size_t line_no = 0;
    bool seen_negative = false;
    bool seen_zero = false;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        const auto fields = split_csv(line);
        double first = 0.0;
        if (std::exchange(first_row, false) && !fields.empty() && !parse_double(fields[0], first)) {
            continue; // header
        }
        if (fields.size() != 5) {
            throw IngestionError("expected 5 columns, found " + std::to_string(fields.size()),
                                 line_no);
        }
        double values[5];
        for (std::size_t i = 0; i < 5; ++i) {
            if (!parse_double(fields[i], values[i])) {
                throw IngestionError("column " + std::to_string(i + 1) + " is not a number: '" +
                                         fields[i] + "'",
                                     line_no);
            }
        }
        const double label = values[4];
        if (label != 0.0 && label != 1.0 && label != -1.0) {
            throw IngestionError("label must be 0, 1 or -1", line_no);
        }
        seen_negative = seen_negative || label == -1.0;
        seen_zero = seen_zero || label == 0.0;
        if (seen_negative && seen_zero) {
            throw IngestionError("labels mix the {0,1} and {-1,1} conventions", line_no);
        }
        Eigen::Vector4d padded(values[0], values[1], kFeaturePad0, kFeaturePad1);
        Sample sample;
        sample.features = padded / padded.norm();
        sample.label = label == 1.0 ? 1.0 : -1.0;
        data.samples.push_back(sample);
    }
    bool has_pos = false;
    bool has_neg = false;
    for (const auto &s : data.samples) {
        has_pos = has_pos || s.label > 0;
        has_neg = has_neg || s.label < 0;
    }
    if (!has_pos || !has_neg) {
        throw IngestionError("dataset must contain both classes", line_no);
    }

    std::vector<std::size_t> order(data.samples.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    Rng rng(seed);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    const auto n_train =
        static_cast<std::size_t>(std::lround(train_fraction * static_cast<double>(order.size())));
    data.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
    data.validation.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
    return data;
}

Dataset load_iris(const std::filesystem::path &path, std::uint64_t seed, double train_fraction) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open dataset " + path.string());
    }
    return parse_iris(in, seed, train_fraction);
}

StateVector encode_amplitudes(const Eigen::Vector4d &features) {
    return normalized_state(2, features.cast<Complex>());
}

} // namespace laws
