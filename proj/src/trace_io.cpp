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

#include "laws/trace_io.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "laws/errors.hpp"

#ifndef LAWS_VQA_VERSION
#define LAWS_VQA_VERSION "0.0.0"
#endif

namespace laws {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string format_trace_csv(const std::vector<TraceRecord> &trace) {
    std::string out = "iteration,cost,grad_norm,wall_ms";
    if (!trace.empty()) {
        for (const auto &[name, value] : trace.front().extra) {
            out += ',' + name;
        }
    }
    out += '\n';
    for (const auto &rec : trace) {
        out += std::to_string(rec.iteration) + ',' + num(rec.cost) + ',' + num(rec.grad_norm) +
               ',' + num(rec.wall_ms);
        for (const auto &[name, value] : rec.extra) {
            out += ',' + num(value);
        }
        out += '\n';
    }
    return out;
}

std::string format_bp_csv(const std::vector<BpRow> &rows) {
    std::string out = "n_qubits,n_samples,grad_mean,grad_variance,stderr\n";
    for (const auto &row : rows) {
        out += std::to_string(row.n_qubits) + ',' + std::to_string(row.n_samples) + ',' +
               num(row.grad_mean) + ',' + num(row.grad_variance) + ',' + num(row.stderr_mean) +
               '\n';
    }
    return out;
}

std::string format_metadata(const ExperimentResult &result, const std::string &config_text) {
    nlohmann::ordered_json meta;
    meta["provenance"] = provenance();
    meta["experiment"] = result.experiment;
    meta["optimizer"] = result.optimizer;
    meta["seed"] = result.seed;
    meta["iterations"] = result.iterations;
    meta["completed_iterations"] = result.trace.empty() ? 0 : result.trace.back().iteration;
    meta["aborted"] = result.aborted;
    if (result.aborted) {
        meta["abort_reason"] = result.abort_reason;
    }
    if (!result.trace.empty()) {
        meta["final_cost"] = result.trace.back().cost;
    }
    std::vector<double> theta(result.final_theta.data(),
                              result.final_theta.data() + result.final_theta.size());
    meta["final_theta"] = theta;
    meta["config"] = config_text;
    return meta.dump(2) + '\n';
}

std::string format_bp_metadata(std::uint64_t seed, const DecayFit &fit,
                               const std::string &config_text) {
    nlohmann::ordered_json meta;
    meta["provenance"] = provenance();
    meta["experiment"] = "bp-scan";
    meta["seed"] = seed;
    meta["slope"] = fit.slope;
    meta["intercept"] = fit.intercept;
    meta["slope_stderr"] = fit.slope_stderr;
    meta["p_value"] = fit.p_value;
    meta["config"] = config_text;
    return meta.dump(2) + '\n';
}

void write_file_atomic(const std::filesystem::path &path, const std::string &content) {
    static std::atomic<unsigned long> counter{0};
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                          ec.message());
        }
    }
    std::ostringstream suffix;
    suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
           << counter++;
    auto tmp = path;
    tmp += suffix.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            throw IoError("write to " + tmp.string() + " failed");
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move " + tmp.string() + " to " + path.string());
    }
}

std::string provenance() { return std::string("laws-vqa ") + LAWS_VQA_VERSION; }

} // namespace laws
