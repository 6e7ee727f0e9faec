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

#include "laws/config.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "laws/errors.hpp"
#include "laws/experiments.hpp"

namespace laws {

namespace {

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string unquote(const std::string &value) {
    if (value.size() >= 2 && ((value.front() == '"' && value.back() == '"') ||
                              (value.front() == '\'' && value.back() == '\''))) {
        return value.substr(1, value.size() - 2);
    }
    return value;
}

[[noreturn]] void bad_value(const std::string &key, const std::string &value,
                            const std::string &expected) {
    throw ConfigurationError("key '" + key + "': expected " + expected + ", got '" + value + "'");
}

double to_double(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used == value.size() && std::isfinite(d)) {
            return d;
        }
    }
    catch (const std::exception &) {
    }
    bad_value(key, value, "a finite number");
}

long long to_integer(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used == value.size()) {
            return v;
        }
    }
    catch (const std::exception &) {
    }
    bad_value(key, value, "an integer");
}

int to_int(const std::string &key, const std::string &value) {
    const auto v = to_integer(key, value);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        bad_value(key, value, "an integer in range");
    }
    return static_cast<int>(v);
}

std::uint64_t to_seed(const std::string &key, const std::string &value) {
    const auto v = to_integer(key, value);
    if (v < 0) {
        bad_value(key, value, "a non-negative integer");
    }
    return static_cast<std::uint64_t>(v);
}

std::vector<std::string> to_list(const std::string &value) {
    std::string body = value;
    if (!body.empty() && body.front() == '[' && body.back() == ']') {
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> items;
    std::istringstream in(body);
    for (std::string item; std::getline(in, item, ',');) {
        item = unquote(trim(item));
        if (!item.empty()) {
            items.push_back(item);
        }
    }
    return items;
}

template <typename Enum>
Enum to_enum(const std::string &key, const std::string &value,
             std::initializer_list<std::pair<const char *, Enum>> options) {
    std::string expected;
    for (const auto &[name, e] : options) {
        if (value == name) {
            return e;
        }
        expected += (expected.empty() ? "one of " : ", ") + std::string(name);
    }
    bad_value(key, value, expected);
}

template <typename Enum>
std::string enum_text(Enum value, std::initializer_list<std::pair<const char *, Enum>> options) {
    for (const auto &[name, e] : options) {
        if (e == value) {
            return name;
        }
    }
    return "?";
}

const std::initializer_list<std::pair<const char *, Schedule>> kSchedules{
    {"constant", Schedule::Constant}, {"theorem1", Schedule::Theorem1}};
const std::initializer_list<std::pair<const char *, WarmStartStrategy>> kStrategies{
    {"inner-sgd", WarmStartStrategy::InnerSgd},
    {"averaged-at-theta", WarmStartStrategy::AveragedAtTheta},
    {"ema", WarmStartStrategy::Ema}};
const std::initializer_list<std::pair<const char *, DeltaVariant>> kVariants{
    {"lookahead", DeltaVariant::Lookahead},
    {"fisher", DeltaVariant::Fisher},
    {"adam-like", DeltaVariant::AdamLike}};

struct KeySpec {
    const char *name;
    const char *section;
    std::function<void(RunConfig &, const std::string &key, const std::string &value)> set;
    std::function<std::string(const RunConfig &)> get;
};

std::string num(double v) {
    // Shortest text that reads back to the same double.
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string out(buf, res.ptr);
    if (out.find_first_of(".eEn") == std::string::npos) {
        out += ".0";
    }
    return out;
}

std::string quoted(const std::string &s) { return '"' + s + '"'; }

template <typename T> std::string join(const std::vector<T> &items) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < items.size(); ++i) {
        out << (i ? ", " : "");
        if constexpr (std::is_same_v<T, std::string>) {
            out << quoted(items[i]);
        }
        else if constexpr (std::is_same_v<T, double>) {
            out << num(items[i]);
        }
        else {
            out << items[i];
        }
    }
    out << ']';
    return out.str();
}

const std::vector<KeySpec> &key_table() {
    using C = RunConfig;
    using S = const std::string &;
    static const std::vector<KeySpec> table{
        {"experiment", "experiment",
         [](C &c, S, S v) { c.experiment = parse_experiment(v); },
         [](const C &c) { return quoted(std::string(experiment_name(c.experiment))); }},
        {"seed", "experiment", [](C &c, S k, S v) { c.seed = to_seed(k, v); },
         [](const C &c) { return std::to_string(c.seed); }},
        {"iterations", "experiment", [](C &c, S k, S v) { c.iterations = to_int(k, v); },
         [](const C &c) { return std::to_string(c.iterations); }},
        {"circuit_seed", "experiment", [](C &c, S k, S v) { c.circuit_seed = to_seed(k, v); },
         [](const C &c) { return std::to_string(c.circuit_seed); }},
        {"hamiltonian", "experiment", [](C &c, S, S v) { c.hamiltonian = v; },
         [](const C &c) { return quoted(c.hamiltonian.string()); }},
        {"dataset", "experiment", [](C &c, S, S v) { c.dataset = v; },
         [](const C &c) { return quoted(c.dataset.string()); }},
        {"train_fraction", "experiment",
         [](C &c, S k, S v) { c.train_fraction = to_double(k, v); },
         [](const C &c) { return num(c.train_fraction); }},
        {"batch_size", "experiment",
         [](C &c, S k, S v) {
             const int b = to_int(k, v);
             if (b < 1) {
                 bad_value(k, v, "a positive integer");
             }
             c.batch_size = static_cast<std::size_t>(b);
         },
         [](const C &c) { return std::to_string(c.batch_size); }},
        {"qubits", "experiment",
         [](C &c, S k, S v) {
             c.qubits.clear();
             for (const auto &item : to_list(v)) {
                 c.qubits.push_back(to_int(k, item));
             }
         },
         [](const C &c) { return join(c.qubits); }},
        {"samples", "experiment", [](C &c, S k, S v) { c.samples = to_int(k, v); },
         [](const C &c) { return std::to_string(c.samples); }},
        {"depth_factor", "experiment", [](C &c, S k, S v) { c.depth_factor = to_int(k, v); },
         [](const C &c) { return std::to_string(c.depth_factor); }},
        {"threshold", "experiment", [](C &c, S k, S v) { c.threshold = to_double(k, v); },
         [](const C &c) { return c.threshold ? num(*c.threshold) : std::string("\"\""); }},
        {"optimizers", "experiment", [](C &c, S, S v) { c.optimizers = to_list(v); },
         [](const C &c) { return join(c.optimizers); }},
        {"seeds", "experiment",
         [](C &c, S k, S v) {
             c.seeds.clear();
             for (const auto &item : to_list(v)) {
                 c.seeds.push_back(to_seed(k, item));
             }
         },
         [](const C &c) { return join(c.seeds); }},
        {"eta_sweep", "experiment",
         [](C &c, S k, S v) {
             c.eta_sweep = to_enum<bool>(k, v, {{"true", true}, {"false", false}});
         },
         [](const C &c) { return std::string(c.eta_sweep ? "true" : "false"); }},
        {"eta_grid", "experiment",
         [](C &c, S k, S v) {
             c.eta_grid.clear();
             for (const auto &item : to_list(v)) {
                 c.eta_grid.push_back(to_double(k, item));
             }
         },
         [](const C &c) { return join(c.eta_grid); }},

        {"optimizer", "optimizer", [](C &c, S, S v) { c.optimizer = v; },
         [](const C &c) { return quoted(c.optimizer); }},
        {"eta", "optimizer", [](C &c, S k, S v) { c.optimizer_config.eta = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.eta); }},
        {"mu", "optimizer", [](C &c, S k, S v) { c.optimizer_config.mu = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.mu); }},
        {"K", "optimizer", [](C &c, S k, S v) { c.optimizer_config.K = to_int(k, v); },
         [](const C &c) { return std::to_string(c.optimizer_config.K); }},
        {"alpha", "optimizer",
         [](C &c, S k, S v) { c.optimizer_config.alpha = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.alpha); }},
        {"beta1", "optimizer",
         [](C &c, S k, S v) { c.optimizer_config.beta1 = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.beta1); }},
        {"beta2", "optimizer",
         [](C &c, S k, S v) { c.optimizer_config.beta2 = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.beta2); }},
        {"beta", "optimizer", [](C &c, S k, S v) { c.optimizer_config.beta = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.beta); }},
        {"epsilon", "optimizer",
         [](C &c, S k, S v) { c.optimizer_config.epsilon = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.epsilon); }},
        {"delta", "optimizer",
         [](C &c, S k, S v) { c.optimizer_config.delta = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.delta); }},
        {"cutoff", "optimizer",
         [](C &c, S k, S v) { c.optimizer_config.cutoff = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.cutoff); }},
        {"c0", "optimizer", [](C &c, S k, S v) { c.optimizer_config.c0 = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.c0); }},
        {"lambda", "optimizer",
         [](C &c, S k, S v) { c.optimizer_config.lambda = to_double(k, v); },
         [](const C &c) { return num(c.optimizer_config.lambda); }},
        {"schedule", "optimizer",
         [](C &c, S k, S v) { c.optimizer_config.schedule = to_enum(k, v, kSchedules); },
         [](const C &c) { return quoted(enum_text(c.optimizer_config.schedule, kSchedules)); }},
        {"warm_start_strategy", "optimizer",
         [](C &c, S k, S v) {
             c.optimizer_config.warm_start_strategy = to_enum(k, v, kStrategies);
         },
         [](const C &c) {
             return quoted(enum_text(c.optimizer_config.warm_start_strategy, kStrategies));
         }},
        {"delta_variant", "optimizer",
         [](C &c, S k, S v) { c.optimizer_config.delta_variant = to_enum(k, v, kVariants); },
         [](const C &c) {
             return quoted(enum_text(c.optimizer_config.delta_variant, kVariants));
         }},
        {"inner_optimizer", "optimizer",
         [](C &c, S, S v) { c.optimizer_config.inner_optimizer = v; },
         [](const C &c) { return quoted(c.optimizer_config.inner_optimizer); }},

        {"output_dir", "output", [](C &c, S, S v) { c.output_dir = v; },
         [](const C &c) { return quoted(c.output_dir.string()); }},
    };
    return table;
}

const KeySpec &find_key(const std::string &key) {
    const auto &table = key_table();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const KeySpec &spec) { return key == spec.name; });
    if (it == table.end()) {
        throw ConfigurationError("unknown key '" + key + "'");
    }
    return *it;
}

void set_key(RunConfig &config, const std::string &key, const std::string &raw,
             const std::string &section) {
    const auto &spec = find_key(key);
    if (!section.empty() && section != spec.section) {
        throw ConfigurationError("key '" + key + "' belongs in section [" + spec.section +
                                 "], found in [" + section + "]");
    }
    const std::string value = unquote(trim(raw));
    try {
        spec.set(config, key, value);
    }
    catch (const ConfigurationError &e) {
        const std::string what = e.what();
        if (what.find("'" + key + "'") != std::string::npos) {
            throw;
        }
        throw ConfigurationError("key '" + key + "': " + what);
    }
}

void require_file(const std::filesystem::path &path, const char *key) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw ConfigurationError("key '" + std::string(key) + "': file " + path.string() +
                                 " does not exist");
    }
}

} // namespace

std::string_view experiment_name(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::RandomPqc:
        return "random-pqc";
    case ExperimentKind::H2Vqe:
        return "h2-vqe";
    case ExperimentKind::Iris:
        return "iris";
    case ExperimentKind::BpScan:
        return "bp-scan";
    }
    return "?";
}

ExperimentKind parse_experiment(std::string_view name) {
    for (auto kind : {ExperimentKind::RandomPqc, ExperimentKind::H2Vqe, ExperimentKind::Iris,
                      ExperimentKind::BpScan}) {
        if (experiment_name(kind) == name) {
            return kind;
        }
    }
    throw ConfigurationError("key 'experiment': unknown experiment '" + std::string(name) +
                             "'; expected random-pqc, h2-vqe, iris or bp-scan");
}

int RunConfig::resolved_iterations() const {
    if (iterations >= 0) {
        return iterations;
    }
    return experiment == ExperimentKind::Iris ? 50 : 400;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto &spec : key_table()) {
        keys.emplace_back(spec.name);
    }
    return keys;
}

void apply_config_text(RunConfig &config, std::istream &in) {
    std::string section;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // '#' inside a quoted value is kept.
        bool in_quotes = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') {
                in_quotes = !in_quotes;
            }
            else if (line[i] == '#' && !in_quotes) {
                line.erase(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigurationError("line " + std::to_string(line_no) +
                                         ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "experiment" && section != "optimizer" && section != "output") {
                throw ConfigurationError("unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigurationError("line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        }
        set_key(config, trim(line.substr(0, eq)), line.substr(eq + 1), section);
    }
}

void apply_overrides(RunConfig &config, const ConfigOverrides &overrides) {
    for (const auto &[key, value] : overrides) {
        set_key(config, key, value, "");
    }
}

void validate(const RunConfig &config) {
    try {
        (void)parse_optimizer(config.optimizer);
    } catch (const ConfigurationError &e) {
        throw ConfigurationError(std::string("key 'optimizer': ") + e.what());
    }
    config.optimizer_config.validate();
    if (config.optimizers.empty()) {
        throw ConfigurationError("key 'optimizers': list is empty");
    }
    for (const auto &name : config.optimizers) {
        try {
            (void)parse_optimizer(name);
        } catch (const ConfigurationError &e) {
            throw ConfigurationError(std::string("key 'optimizers': ") + e.what());
        }
    }
    if (config.seeds.empty()) {
        throw ConfigurationError("key 'seeds': list is empty");
    }
    if (config.eta_sweep && config.eta_grid.empty()) {
        throw ConfigurationError("key 'eta_grid': list is empty");
    }
    for (double eta : config.eta_grid) {
        if (!(eta > 0.0)) {
            throw ConfigurationError("key 'eta_grid': entries must be positive");
        }
    }
    if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0)) {
        throw ConfigurationError("key 'train_fraction': must lie in (0, 1)");
    }
    if (config.samples < 30) {
        throw ConfigurationError("key 'samples': at least 30 samples required");
    }
    if (config.depth_factor < 1) {
        throw ConfigurationError("key 'depth_factor': must be at least 1");
    }
    if (config.qubits.empty()) {
        throw ConfigurationError("key 'qubits': list is empty");
    }
    for (int n : config.qubits) {
        if (n < 1 || n > kMaxQubits) {
            throw ConfigurationError("key 'qubits': " + std::to_string(n) +
                                     " outside [1, 20]");
        }
    }
    switch (config.experiment) {
    case ExperimentKind::H2Vqe:
        require_file(config.hamiltonian, "hamiltonian");
        break;
    case ExperimentKind::Iris:
        require_file(config.dataset, "dataset");
        break;
    default:
        break;
    }
}

RunConfig parse_config(const std::optional<std::filesystem::path> &file,
                       const ConfigOverrides &overrides) {
    RunConfig config;
    if (file) {
        std::ifstream in(*file);
        if (!in) {
            throw ConfigurationError("config file " + file->string() + " cannot be read");
        }
        apply_config_text(config, in);
    }
    apply_overrides(config, overrides);
    if (config.hamiltonian.empty()) {
        config.hamiltonian = default_data_dir() / "h2_sto3g.ham";
    }
    if (config.dataset.empty()) {
        config.dataset = default_data_dir() / "iris_setosa_versicolor.csv";
    }
    validate(config);
    return config;
}

std::string to_config_text(const RunConfig &config) {
    std::ostringstream out;
    std::string section;
    for (const auto &spec : key_table()) {
        if (section != spec.section) {
            section = spec.section;
            out << (out.tellp() > 0 ? "\n" : "") << '[' << section << "]\n";
        }
        if (std::string(spec.name) == "threshold" && !config.threshold) {
            continue;
        }
        out << spec.name << " = " << spec.get(config) << '\n';
    }
    return out.str();
}

} // namespace laws
