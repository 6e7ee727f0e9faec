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

// laws_vqa: command-line front end.
//
//   laws_vqa run      [--config FILE] [--validate] [--KEY VALUE ...]
//   laws_vqa compare  [--config FILE] [--validate] [--KEY VALUE ...]
//   laws_vqa validate [--config FILE] [--KEY VALUE ...]
//   laws_vqa bp-scan  [--config FILE] [--validate] [--KEY VALUE ...]
//
// Every config-file key doubles as a flag (`--eta 0.05`, `--qubits=2,4,6`).
// Exit codes: 0 ok, 1 numeric abort, 2 configuration error, 3 I/O error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laws/commands.hpp"
#include "laws/config.hpp"
#include "laws/errors.hpp"
#include "laws/trace_io.hpp"

namespace {

laws::ConfigOverrides parse_overrides(const std::vector<std::string> &args) {
    laws::ConfigOverrides out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto &arg = args[i];
        if (arg.rfind("--", 0) != 0 || arg.size() == 2) {
            throw laws::ConfigurationError("unexpected argument '" + arg + "'");
        }
        std::string key = arg.substr(2);
        std::string value;
        if (auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key.resize(eq);
        } else if (i + 1 < args.size()) {
            value = args[++i];
        } else {
            throw laws::ConfigurationError(key + ": missing value");
        }
        std::replace(key.begin(), key.end(), '-', '_');
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Warm-start variational quantum optimizer workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", laws::provenance());

    struct Options {
        std::optional<std::string> config;
        bool validate_only = false;
    };
    Options opts;

    auto add = [&](const std::string &name, const std::string &help, bool with_validate) {
        auto *sub = app.add_subcommand(name, help);
        sub->allow_extras();
        sub->add_option("--config", opts.config, "Sectioned key-value config file");
        if (with_validate) {
            sub->add_flag("--validate", opts.validate_only, "Resolve the config and exit");
        }
        return sub;
    };
    auto *run = add("run", "Run one optimizer on one experiment", true);
    auto *compare = add("compare", "Run every optimizer x seed cell and a summary CSV", true);
    auto *validate = add("validate", "Resolve and check the config without running", false);
    auto *bp_scan = add("bp-scan", "Gradient-variance scan over register sizes", true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? laws::kExitOk : laws::kExitConfig;
    }

    CLI::App *active = app.get_subcommands().front();
    try {
        auto overrides = parse_overrides(active->remaining());
        if (active == bp_scan) {
            overrides.insert(overrides.begin(), {"experiment", "bp-scan"});
        }
        std::optional<std::filesystem::path> file;
        if (opts.config) {
            file = *opts.config;
        }
        const laws::RunConfig config = laws::parse_config(file, overrides);
        if (active == validate || opts.validate_only) {
            std::cout << laws::to_config_text(config);
            return laws::kExitOk;
        }
        if (active == compare) {
            return laws::cmd_compare(config, std::cout);
        }
        if (active == bp_scan) {
            return laws::cmd_bp_scan(config, std::cout);
        }
        (void)run;
        return laws::cmd_run(config, std::cout);
    } catch (const laws::IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return laws::kExitIo;
    } catch (const std::filesystem::filesystem_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return laws::kExitIo;
    } catch (const laws::NumericError &e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return laws::kExitNumericAbort;
    } catch (const laws::LawsError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return laws::kExitConfig;
    }
}
