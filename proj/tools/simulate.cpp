// thzlink - link-level Monte Carlo simulator for multi-carrier THz wireless links
// Copyright (C) 2026 thzlink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>

#include "thzlink/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"thzlink link-level Monte Carlo simulator"};

    std::string config_path;
    std::string experiment;
    std::string out_dir = ".";
    std::string threshold_mode;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    bool seed_given = false;
    bool trials_given = false;

    app.add_option("--config", config_path, "JSON config file")->required();
    app.add_option("--experiment", experiment, "fig1|fig2|fig3|fig4|custom")
        ->required()
        ->check(CLI::IsMember(thz::preset_names()));
    app.add_option("--seed", seed, "override RNG seed")
        ->each([&](const std::string&) { seed_given = true; });
    app.add_option("--trials", trials, "override Monte Carlo trials per point")
        ->each([&](const std::string&) { trials_given = true; });
    app.add_option("--out", out_dir, "output directory (CSV + manifest)");
    app.add_option("--threshold-mode", threshold_mode, "paper|shannon")
        ->check(CLI::IsMember({"paper", "shannon"}));

    CLI11_PARSE(app, argc, argv);

    thz::ParsedConfig parsed;
    try {
        parsed = thz::load_config(config_path);
    } catch (const thz::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (seed_given) parsed.config.seed = seed;
    if (trials_given) parsed.config.n_trials = trials;
    if (threshold_mode == "paper") {
        parsed.config.threshold_mode = thz::ThresholdMode::paper;
    } else if (threshold_mode == "shannon") {
        parsed.config.threshold_mode = thz::ThresholdMode::shannon;
    }

    try {
        const auto result = thz::run_preset(experiment, parsed, out_dir);
        std::cout << "wrote " << result.csv_path << " (" << result.rows
                  << " rows) and " << result.manifest_path << "\n";
    } catch (const thz::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
