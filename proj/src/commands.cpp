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

#include "laws/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "laws/errors.hpp"
#include "laws/trace_io.hpp"

namespace laws {

namespace {

std::string format_cost(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

void write_cell(const RunConfig &config, const ExperimentResult &result, const std::string &stem,
                std::ostream &log) {
    const auto csv = config.output_dir / (stem + ".csv");
    write_file_atomic(csv, format_trace_csv(result.trace));
    write_file_atomic(config.output_dir / (stem + ".json"),
                      format_metadata(result, to_config_text(config)));
    log << "wrote " << csv.string() << '\n';
    if (result.aborted) {
        log << "aborted: " << result.abort_reason << '\n';
    }
}

} // namespace

unsigned worker_threads() {
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const char *env = std::getenv("LAWS_VQA_THREADS");
    if (env == nullptr || *env == '\0') {
        return hw;
    }
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) {
        throw ConfigurationError("LAWS_VQA_THREADS must be a positive integer, got '" +
                                 std::string(env) + "'");
    }
    return static_cast<unsigned>(v);
}

ExperimentResult run_experiment(const RunConfig &config, std::string_view optimizer,
                                std::uint64_t seed) {
    const int iterations = config.resolved_iterations();
    switch (config.experiment) {
    case ExperimentKind::RandomPqc:
        return run_random_pqc(optimizer, config.optimizer_config, seed, iterations,
                              config.circuit_seed);
    case ExperimentKind::H2Vqe:
        return run_h2_vqe(optimizer, config.optimizer_config, seed, iterations,
                          load_h2_hamiltonian(config.hamiltonian));
    case ExperimentKind::Iris:
        return run_iris_classifier(optimizer, config.optimizer_config, seed, iterations,
                                   load_iris(config.dataset, seed, config.train_fraction),
                                   config.batch_size);
    case ExperimentKind::BpScan:
        break;
    }
    throw ConfigurationError("experiment: bp-scan has no optimizer trace; use the bp-scan command");
}

std::optional<double> effective_threshold(const RunConfig &config) {
    if (config.threshold) {
        return config.threshold;
    }
    if (config.experiment == ExperimentKind::H2Vqe) {
        return kH2GroundEnergy + 1e-3;
    }
    return std::nullopt;
}

std::optional<int> iterations_to_threshold(const std::vector<TraceRecord> &trace,
                                           double threshold) {
    for (const auto &rec : trace) {
        if (rec.cost <= threshold) {
            return rec.iteration;
        }
    }
    return std::nullopt;
}

std::string cell_stem(const RunConfig &config, std::string_view optimizer, std::uint64_t seed,
                      int occurrence) {
    std::string stem = std::string(experiment_name(config.experiment)) + '_' +
                       std::string(optimizer) + "_seed" + std::to_string(seed);
    if (occurrence > 1) {
        stem += '_' + std::to_string(occurrence);
    }
    return stem;
}

int cmd_run(const RunConfig &config, std::ostream &log) {
    if (config.experiment == ExperimentKind::BpScan) {
        return cmd_bp_scan(config, log);
    }
    const auto result = run_experiment(config, config.optimizer, config.seed);
    write_cell(config, result, cell_stem(config, config.optimizer, config.seed), log);
    return result.aborted ? kExitNumericAbort : kExitOk;
}

int cmd_compare(const RunConfig &config, std::ostream &log) {
    if (config.experiment == ExperimentKind::BpScan) {
        throw ConfigurationError("experiment: compare needs an optimization experiment, not bp-scan");
    }
    if (config.optimizers.size() < 2) {
        throw ConfigurationError("optimizers: compare needs at least two optimizers");
    }
    if (config.seeds.empty()) {
        throw ConfigurationError("seeds: compare needs at least one seed");
    }
    for (const auto &name : config.optimizers) {
        (void)parse_optimizer(name);
    }

    struct Cell {
        std::string optimizer;
        std::string label;
        RunConfig config;
        std::uint64_t seed = 0;
        std::string stem;
        ExperimentResult result;
    };
    std::vector<Cell> cells;
    std::map<std::string, int> seen;
    for (const auto &name : config.optimizers) {
        std::vector<std::pair<std::string, RunConfig>> variants;
        if (config.eta_sweep) {
            for (double eta : config.eta_grid) {
                RunConfig swept = config;
                swept.optimizer_config.eta = eta;
                variants.emplace_back(name + "@eta=" + shortest(eta), std::move(swept));
            }
        } else {
            variants.emplace_back(name, config);
        }
        for (auto &[label, cell_config] : variants) {
            const int occurrence = ++seen[label];
            std::string file_label = label;
            std::replace(file_label.begin(), file_label.end(), '@', '-');
            std::erase(file_label, '=');
            for (auto seed : config.seeds) {
                cells.push_back({name, label, cell_config, seed,
                                 cell_stem(config, file_label, seed, occurrence), {}});
            }
        }
    }

    const unsigned workers =
        std::min<unsigned>(worker_threads(), static_cast<unsigned>(cells.size()));
    std::mutex log_mutex;
    std::exception_ptr failure;
    auto work = [&](unsigned worker) {
        for (std::size_t i = worker; i < cells.size(); i += workers) {
            try {
                auto &cell = cells[i];
                cell.result = run_experiment(cell.config, cell.optimizer, cell.seed);
                std::lock_guard lock(log_mutex);
                write_cell(cell.config, cell.result, cell.stem, log);
            } catch (...) {
                std::lock_guard lock(log_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    const auto threshold = effective_threshold(config);
    std::string summary = "optimizer,seed,final_cost,iters_to_threshold\n";
    bool any_aborted = false;
    for (const auto &cell : cells) {
        any_aborted = any_aborted || cell.result.aborted;
        summary += cell.label + ',' + std::to_string(cell.seed) + ',' +
                   format_cost(cell.result.trace.back().cost) + ',';
        if (threshold) {
            if (auto hit = iterations_to_threshold(cell.result.trace, *threshold)) {
                summary += std::to_string(*hit);
            }
        }
        summary += '\n';
    }
    const auto path = config.output_dir / (std::string(experiment_name(config.experiment)) +
                                           "_summary.csv");
    write_file_atomic(path, summary);
    log << "wrote " << path.string() << '\n';
    return any_aborted ? kExitNumericAbort : kExitOk;
}

int cmd_bp_scan(const RunConfig &config, std::ostream &log) {
    BpScanConfig scan;
    scan.qubits = config.qubits;
    scan.samples = config.samples;
    scan.depth_factor = config.depth_factor;
    const auto rows = run_bp_scan(scan, config.seed, worker_threads());
    const std::string stem = "bp-scan_seed" + std::to_string(config.seed);
    const auto csv = config.output_dir / (stem + ".csv");
    write_file_atomic(csv, format_bp_csv(rows));
    if (rows.size() >= 3) {
        const auto fit = fit_log_variance(rows);
        write_file_atomic(config.output_dir / (stem + ".json"),
                          format_bp_metadata(config.seed, fit, to_config_text(config)));
        log << "slope " << fit.slope << " p " << fit.p_value << '\n';
    }
    log << "wrote " << csv.string() << '\n';
    return kExitOk;
}

} // namespace laws
