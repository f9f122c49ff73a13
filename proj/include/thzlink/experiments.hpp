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

#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "thzlink/config.hpp"
#include "thzlink/mc_engine.hpp"

namespace thz {

// All schema violations of one document, each with a JSON-pointer path.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const { return errors_; }

private:
    std::vector<std::string> errors_;
};

struct ParsedConfig {
    SystemConfig config;
    RunOptions run;
    std::set<std::string> present_keys;  // top-level keys given explicitly
};

// Parses and validates a JSON config document. Gains are accepted in dBi
// (*_dbi) or linear (*_linear), powers in dB over noise (*_db) or linear;
// unknown keys are rejected. Throws ConfigError with field-level messages.
ParsedConfig parse_config(const nlohmann::json& doc);
ParsedConfig load_config(const std::string& path);

// Canonical resolved echo: all defaults materialized, linear units. Feeding
// the echo back through parse_config reproduces an identical config.
nlohmann::json resolved_config_json(const SystemConfig& config, const RunOptions& run);

struct PresetResult {
    std::string name;
    std::string csv_path;
    std::string manifest_path;
    std::size_t rows = 0;
    bool any_escalated = false;
};

// Named experiment presets. fig1..fig4 lock the standard constants
// (K=10, 2 GHz carriers, 5 MHz total guard, 335 GHz, 55 dBi, m=4) unless the
// config sets them explicitly, which keeps the config value and warns on
// stderr. Output CSV is written atomically next to a JSON run manifest.
PresetResult run_preset(const std::string& name, const ParsedConfig& parsed,
                        const std::string& out_dir);

std::vector<std::string> preset_names();

}  // namespace thz
