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

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "laws/commands.hpp"
#include "laws/config.hpp"
#include "laws/errors.hpp"
#include "laws/experiments.hpp"
#include "laws/optimizers.hpp"
#include "laws/trace_io.hpp"

namespace py = pybind11;
using namespace laws;

namespace {

py::dict trace_dict(const ExperimentResult &r) {
    std::vector<int> iteration;
    std::vector<double> cost;
    std::vector<double> grad_norm;
    std::vector<double> wall_ms;
    std::map<std::string, std::vector<double>> extra;
    for (const auto &rec : r.trace) {
        iteration.push_back(rec.iteration);
        cost.push_back(rec.cost);
        grad_norm.push_back(rec.grad_norm);
        wall_ms.push_back(rec.wall_ms);
        for (const auto &[name, value] : rec.extra) {
            extra[name].push_back(value);
        }
    }
    py::dict d;
    d["iteration"] = iteration;
    d["cost"] = cost;
    d["grad_norm"] = grad_norm;
    d["wall_ms"] = wall_ms;
    for (const auto &[name, values] : extra) {
        d[py::str(name)] = values;
    }
    return d;
}

ConfigOverrides to_overrides(const py::dict &options) {
    ConfigOverrides out;
    for (const auto &[key, value] : options) {
        std::string text;
        if (py::isinstance<py::bool_>(value)) {
            text = value.cast<bool>() ? "true" : "false";
        } else if (py::isinstance<py::list>(value) || py::isinstance<py::tuple>(value)) {
            for (const auto &item : value) {
                text += (text.empty() ? "" : ",") + py::str(item).cast<std::string>();
            }
        } else {
            text = py::str(value).cast<std::string>();
        }
        out.emplace_back(py::str(key).cast<std::string>(), text);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statevector VQA optimizers: LAWS, WS-SGD, QNG and baselines";

    auto base = py::register_exception<LawsError>(m, "LawsError", PyExc_RuntimeError);
    py::register_exception<ConfigurationError>(m, "ConfigurationError", base.ptr());
    py::register_exception<UsageError>(m, "UsageError", base.ptr());
    py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());
    py::register_exception<NumericError>(m, "NumericError", base.ptr());
    py::register_exception<IngestionError>(m, "IngestionError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    py::enum_<Schedule>(m, "Schedule")
        .value("CONSTANT", Schedule::Constant)
        .value("THEOREM1", Schedule::Theorem1);
    py::enum_<WarmStartStrategy>(m, "WarmStartStrategy")
        .value("INNER_SGD", WarmStartStrategy::InnerSgd)
        .value("AVERAGED_AT_THETA", WarmStartStrategy::AveragedAtTheta)
        .value("EMA", WarmStartStrategy::Ema);
    py::enum_<DeltaVariant>(m, "DeltaVariant")
        .value("LOOKAHEAD", DeltaVariant::Lookahead)
        .value("FISHER", DeltaVariant::Fisher)
        .value("ADAM_LIKE", DeltaVariant::AdamLike);

    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("eta", &OptimizerConfig::eta)
        .def_readwrite("mu", &OptimizerConfig::mu)
        .def_readwrite("K", &OptimizerConfig::K)
        .def_readwrite("alpha", &OptimizerConfig::alpha)
        .def_readwrite("beta1", &OptimizerConfig::beta1)
        .def_readwrite("beta2", &OptimizerConfig::beta2)
        .def_readwrite("beta", &OptimizerConfig::beta)
        .def_readwrite("epsilon", &OptimizerConfig::epsilon)
        .def_readwrite("delta", &OptimizerConfig::delta)
        .def_readwrite("cutoff", &OptimizerConfig::cutoff)
        .def_readwrite("c0", &OptimizerConfig::c0)
        .def_readwrite("lambda_", &OptimizerConfig::lambda)
        .def_readwrite("schedule", &OptimizerConfig::schedule)
        .def_readwrite("warm_start_strategy", &OptimizerConfig::warm_start_strategy)
        .def_readwrite("delta_variant", &OptimizerConfig::delta_variant)
        .def_readwrite("inner_optimizer", &OptimizerConfig::inner_optimizer)
        .def("validate", &OptimizerConfig::validate);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("experiment", &ExperimentResult::experiment)
        .def_readonly("optimizer", &ExperimentResult::optimizer)
        .def_readonly("seed", &ExperimentResult::seed)
        .def_readonly("iterations", &ExperimentResult::iterations)
        .def_readonly("final_theta", &ExperimentResult::final_theta)
        .def_readonly("aborted", &ExperimentResult::aborted)
        .def_readonly("abort_reason", &ExperimentResult::abort_reason)
        .def_property_readonly("trace", &trace_dict, "Columns of the per-iteration trace.")
        .def("trace_csv", [](const ExperimentResult &r) { return format_trace_csv(r.trace); });

    py::class_<BpRow>(m, "BpRow")
        .def_readonly("n_qubits", &BpRow::n_qubits)
        .def_readonly("n_samples", &BpRow::n_samples)
        .def_readonly("grad_mean", &BpRow::grad_mean)
        .def_readonly("grad_variance", &BpRow::grad_variance)
        .def_readonly("stderr_mean", &BpRow::stderr_mean);

    py::class_<DecayFit>(m, "DecayFit")
        .def_readonly("slope", &DecayFit::slope)
        .def_readonly("intercept", &DecayFit::intercept)
        .def_readonly("slope_stderr", &DecayFit::slope_stderr)
        .def_readonly("p_value", &DecayFit::p_value);

    m.def("registered_optimizers", &registered_optimizers);
    m.def("provenance", &provenance);
    m.def("default_data_dir", &default_data_dir);
    m.def("lr_schedule", &lr_schedule, py::arg("schedule"), py::arg("t"), py::arg("k"),
          py::arg("K"), py::arg("c0"), py::arg("mu0"));

    m.def("run_random_pqc", &run_random_pqc, py::arg("optimizer"),
          py::arg("config") = OptimizerConfig{}, py::arg("seed") = 1, py::arg("iterations") = 400,
          py::arg("circuit_seed") = kDefaultCircuitSeed, py::call_guard<py::gil_scoped_release>());

    m.def(
        "h2_ground_energy",
        [](const std::filesystem::path &path) {
            return exact_ground_energy(load_h2_hamiltonian(path));
        },
        py::arg("hamiltonian") = default_data_dir() / "h2_sto3g.ham");
    m.def(
        "run_h2_vqe",
        [](const std::string &optimizer, const OptimizerConfig &config, std::uint64_t seed,
           int iterations, const std::filesystem::path &path) {
            return run_h2_vqe(optimizer, config, seed, iterations, load_h2_hamiltonian(path));
        },
        py::arg("optimizer"), py::arg("config") = OptimizerConfig{}, py::arg("seed") = 1,
        py::arg("iterations") = 400,
        py::arg("hamiltonian") = default_data_dir() / "h2_sto3g.ham",
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_iris_classifier",
        [](const std::string &optimizer, const OptimizerConfig &config, std::uint64_t seed,
           int iterations, const std::filesystem::path &path, double train_fraction,
           std::size_t batch_size) {
            return run_iris_classifier(optimizer, config, seed, iterations,
                                       load_iris(path, seed, train_fraction), batch_size);
        },
        py::arg("optimizer"), py::arg("config") = OptimizerConfig{}, py::arg("seed") = 1,
        py::arg("iterations") = 50,
        py::arg("dataset") = default_data_dir() / "iris_setosa_versicolor.csv",
        py::arg("train_fraction") = 0.75, py::arg("batch_size") = 5,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_bp_scan",
        [](std::vector<int> qubits, int samples, int depth_factor, std::uint64_t seed,
           unsigned threads) {
            BpScanConfig config;
            config.qubits = std::move(qubits);
            config.samples = samples;
            config.depth_factor = depth_factor;
            return run_bp_scan(config, seed, threads);
        },
        py::arg("qubits") = std::vector<int>{2, 4, 6, 8}, py::arg("samples") = 200,
        py::arg("depth_factor") = 5, py::arg("seed") = 1, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def("fit_log_variance", &fit_log_variance, py::arg("rows"));

    m.def(
        "resolve_config",
        [](const std::optional<std::filesystem::path> &file, const py::dict &options) {
            return to_config_text(parse_config(file, to_overrides(options)));
        },
        py::arg("file") = py::none(), py::arg("options") = py::dict(),
        "Resolved configuration text for a config file plus key overrides.");
    m.def(
        "run",
        [](const std::string &command, const std::optional<std::filesystem::path> &file,
           const py::dict &options) {
            auto overrides = to_overrides(options);
            if (command == "bp-scan") {
                overrides.insert(overrides.begin(), {"experiment", "bp-scan"});
            }
            const auto config = parse_config(file, overrides);
            std::ostringstream log;
            py::gil_scoped_release release;
            if (command == "run") {
                return cmd_run(config, log);
            }
            if (command == "compare") {
                return cmd_compare(config, log);
            }
            if (command == "bp-scan") {
                return cmd_bp_scan(config, log);
            }
            throw ConfigurationError("unknown command '" + command +
                                     "'; expected run, compare or bp-scan");
        },
        py::arg("command"), py::arg("file") = py::none(), py::arg("options") = py::dict(),
        "Runs a CLI subcommand in-process and returns its exit code.");
}
