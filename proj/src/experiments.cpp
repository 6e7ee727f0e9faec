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

#include "laws/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "laws/errors.hpp"

#ifndef LAWS_VQA_DATA_DIR
#define LAWS_VQA_DATA_DIR "data"
#endif

namespace laws {

namespace {

// Streams derived from the experiment seed.
constexpr std::uint64_t kInitStream = 0;
constexpr std::uint64_t kOptimizerStream = 1;

} // namespace

ExperimentResult run_optimization(const Objective &objective, std::string_view optimizer,
                                  const OptimizerConfig &config, ParameterVector theta0,
                                  int iterations, std::uint64_t seed, const MetricsHook &hook) {
    if (iterations < 0) {
        throw ConfigurationError("iterations must be non-negative");
    }
    ExperimentResult result;
    result.optimizer = std::string(optimizer);
    result.seed = seed;
    result.iterations = iterations;
    result.config = config;

    Optimizer opt(optimizer, config, std::move(theta0));
    Rng rng = Rng::derive(seed, kOptimizerStream);

    auto record = [&](int iteration, double wall_ms) {
        TraceRecord rec;
        rec.iteration = iteration;
        rec.cost = objective.cost(opt.theta());
        rec.grad_norm = objective.gradient(opt.theta()).norm();
        rec.wall_ms = wall_ms;
        if (hook) {
            hook(opt.theta(), rec);
        }
        if (!std::isfinite(rec.cost)) {
            throw NumericError("non-finite cost");
        }
        result.trace.push_back(std::move(rec));
    };

    try {
        record(0, 0.0);
        for (int t = 1; t <= iterations; ++t) {
            const auto start = std::chrono::steady_clock::now();
            opt.step(objective, rng);
            const std::chrono::duration<double, std::milli> elapsed =
                std::chrono::steady_clock::now() - start;
            record(t, elapsed.count());
        }
    }
    catch (const NumericError &e) {
        result.aborted = true;
        result.abort_reason = e.what();
    }
    result.final_theta = opt.theta();
    return result;
}

ParameterVector initial_angles(std::size_t n, std::uint64_t seed) {
    Rng rng = Rng::derive(seed, kInitStream);
    ParameterVector theta(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < theta.size(); ++i) {
        theta[i] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return theta;
}

PauliSumHamiltonian random_pqc_observable() {
    std::vector<PauliString> terms{{1.0, {{0, Pauli::Z}, {1, Pauli::Z}}},
                                   {1.0, {{1, Pauli::Z}, {2, Pauli::Z}}}};
    return {3, std::move(terms)};
}

ExperimentResult run_random_pqc(std::string_view optimizer, const OptimizerConfig &config,
                                std::uint64_t seed, int iterations, std::uint64_t circuit_seed) {
    const VqeObjective objective(
        CostFunction(build_random_pqc(3, 4, circuit_seed), random_pqc_observable()));
    auto result = run_optimization(objective, optimizer, config,
                                   initial_angles(objective.n_params(), seed), iterations, seed);
    result.experiment = "random-pqc";
    return result;
}

PauliSumHamiltonian load_h2_hamiltonian(const std::filesystem::path &path) {
    auto h = load_hamiltonian(path, 4);
    const double e0 = exact_ground_energy(h);
    if (std::abs(e0 - kH2GroundEnergy) > kH2EnergyGate) {
        throw ConfigurationError("H2 Hamiltonian " + path.string() + " has ground energy " +
                                 std::to_string(e0) + ", expected -1.1361894 within 5e-4");
    }
    return h;
}

ExperimentResult run_h2_vqe(std::string_view optimizer, const OptimizerConfig &config,
                            std::uint64_t seed, int iterations,
                            const PauliSumHamiltonian &hamiltonian) {
    const VqeObjective objective(CostFunction(build_h2_ansatz(), hamiltonian));
    auto result = run_optimization(objective, optimizer, config,
                                   ParameterVector::Zero(static_cast<Eigen::Index>(
                                       objective.n_params())),
                                   iterations, seed);
    result.experiment = "h2-vqe";
    return result;
}

ExperimentResult run_iris_classifier(std::string_view optimizer, const OptimizerConfig &config,
                                     std::uint64_t seed, int iterations, const Dataset &data,
                                     std::size_t batch_size) {
    const ClassifierObjective objective(ClassifierModel{}, data, batch_size);
    ParameterVector theta0 = initial_angles(objective.n_params(), seed);
    theta0[theta0.size() - 1] = 0.0; // bias
    const auto &model = objective.model();
    auto hook = [&](const ParameterVector &theta, TraceRecord &rec) {
        rec.extra.emplace_back("acc_train", accuracy(model, theta, data, data.train));
        rec.extra.emplace_back("acc_val", accuracy(model, theta, data, data.validation));
    };
    auto result = run_optimization(objective, optimizer, config, std::move(theta0), iterations,
                                   seed, hook);
    result.experiment = "iris";
    return result;
}

std::vector<BpRow> run_bp_scan(const BpScanConfig &config, std::uint64_t seed,
                               unsigned threads) {
    if (config.depth_factor < 1) {
        throw ConfigurationError("depth_factor must be at least 1");
    }
    const int depth_factor = config.depth_factor;
    auto family = [depth_factor](int n, std::uint64_t s) {
        return build_layered_random(n, depth_factor * n, s);
    };
    return bp_variance_scan(family, config.qubits, config.samples, seed, {}, threads);
}

std::filesystem::path default_data_dir() {
    if (const char *env = std::getenv("LAWS_VQA_DATA"); env != nullptr && *env != '\0') {
        return env;
    }
    return LAWS_VQA_DATA_DIR;
}

} // namespace laws
