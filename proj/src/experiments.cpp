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

#include "thzlink/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

namespace thz {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

struct Checker {
    const json& doc;
    std::vector<std::string> errors;
    std::set<std::string> known;

    void err(const std::string& path, const std::string& msg) {
        errors.push_back(path + ": " + msg);
    }

    bool has(const std::string& key) {
        known.insert(key);
        return doc.contains(key);
    }

    double number(const std::string& key, double fallback, bool required = false) {
        if (!has(key)) {
            if (required) err("/" + key, "required field missing");
            return fallback;
        }
        if (!doc[key].is_number()) {
            err("/" + key, "must be a number");
            return fallback;
        }
        return doc[key].get<double>();
    }

    std::uint64_t unsigned_int(const std::string& key, std::uint64_t fallback) {
        if (!has(key)) return fallback;
        if (!doc[key].is_number_unsigned()) {
            err("/" + key, "must be a non-negative integer");
            return fallback;
        }
        return doc[key].get<std::uint64_t>();
    }

    bool boolean(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        if (!doc[key].is_boolean()) {
            err("/" + key, "must be a boolean");
            return fallback;
        }
        return doc[key].get<bool>();
    }

    std::string text(const std::string& key, const std::string& fallback) {
        if (!has(key)) return fallback;
        if (!doc[key].is_string()) {
            err("/" + key, "must be a string");
            return fallback;
        }
        return doc[key].get<std::string>();
    }

    // exactly one of key_db / key_linear; returns linear value
    double power_like(const std::string& key_db, const std::string& key_linear,
                      double fallback, bool required) {
        const bool has_db = has(key_db);
        const bool has_lin = has(key_linear);
        if (has_db && has_lin) {
            err("/" + key_linear, "conflicts with /" + key_db + "; give exactly one");
            return fallback;
        }
        if (!has_db && !has_lin) {
            if (required) {
                err("/" + key_db, "required (or /" + key_linear + ")");
            }
            return fallback;
        }
        const std::string& key = has_db ? key_db : key_linear;
        if (!doc[key].is_number()) {
            err("/" + key, "must be a number");
            return fallback;
        }
        const double v = doc[key].get<double>();
        return has_db ? db_to_linear(v) : v;
    }
};

void atomic_write(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
        if (!out.good()) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

// CI half-width mapped to dB around a linear mean.
double ci_db(double mean, double half_width) {
    if (!(mean - half_width > 0.0)) return std::numeric_limits<double>::infinity();
    return 0.5 * (linear_to_db(mean + half_width) - linear_to_db(mean - half_width));
}

struct PresetSpec {
    std::vector<double> betas_hz;
    std::vector<double> p_adj_db;
    std::vector<double> distances_m;
    std::vector<double> sigma_s_m;
    std::vector<double> gamma_th_db;
    int focus_carrier = 3;  // fig3/fig4 curves follow one interior carrier
};

PresetSpec preset_spec(const std::string& name) {
    PresetSpec s;
    if (name == "fig1") {
        s.betas_hz = {15e6, 150e6, 1.5e9};
        s.p_adj_db = {0.0, 5.0};
    } else if (name == "fig2") {
        s.betas_hz = {15e6, 150e6, 1.5e9, 3e9};
        s.p_adj_db = {0.0, 5.0};
    } else if (name == "fig3") {
        s.distances_m = {2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
        s.sigma_s_m = {0.005, 0.01, 0.02, 0.03};
        s.betas_hz = {1.5e9};
        s.p_adj_db = {5.0};
    } else if (name == "fig4") {
        for (double g = -30.0; g <= 30.0 + 1e-9; g += 5.0) s.gamma_th_db.push_back(g);
        s.sigma_s_m = {0.005, 0.01, 0.02, 0.03};
        s.betas_hz = {1.5e9};
        s.p_adj_db = {5.0};
    }
    return s;
}

// Standard constants the fig presets pin down, with the config key that can
// override them.
void lock_paper_constants(const std::string& preset, SystemConfig& cfg,
                          const std::set<std::string>& present) {
    struct Lock {
        const char* key;
        double value;
        double* field;
    };
    std::vector<Lock> locks = {
        {"signal_bandwidth_hz", 2e9, &cfg.W_sb},
        {"guard_bandwidth_hz", 0.5e6, &cfg.W_gb},
        {"center_frequency_hz", 335e9, &cfg.f_c},
        {"nakagami_m", 4.0, &cfg.m},
    };
    if (preset != "fig3") {
        locks.push_back({"distance_m", 10.0, &cfg.d});
    }
    const double g55 = db_to_linear(55.0);
    if (present.count("k_carriers") && cfg.K != 10) {
        std::cerr << "warning: preset " << preset << " normally uses k_carriers=10, "
                  << "keeping explicit " << cfg.K << "\n";
    } else {
        cfg.K = 10;
        if (!present.count("power_db") && !present.count("power_linear") &&
            !cfg.P.empty()) {
            cfg.P.resize(10, cfg.P.front());
        }
    }
    for (const auto& l : locks) {
        if (present.count(l.key) && *l.field != l.value) {
            std::cerr << "warning: preset " << preset << " normally uses " << l.key
                      << "=" << fmt(l.value) << ", keeping explicit " << fmt(*l.field)
                      << "\n";
        } else {
            *l.field = l.value;
        }
    }
    for (const char* key : {"tx_gain_dbi", "tx_gain_linear"}) {
        if (present.count(key) && cfg.G_t != g55) {
            std::cerr << "warning: preset " << preset
                      << " normally uses tx_gain_dbi=55, keeping explicit value\n";
            break;
        }
        cfg.G_t = g55;
    }
    for (const char* key : {"rx_gain_dbi", "rx_gain_linear"}) {
        if (present.count(key) && cfg.G_r != g55) {
            std::cerr << "warning: preset " << preset
                      << " normally uses rx_gain_dbi=55, keeping explicit value\n";
            break;
        }
        cfg.G_r = g55;
    }
    if (cfg.P.size() != static_cast<std::size_t>(cfg.K)) {
        cfg.P.assign(static_cast<std::size_t>(cfg.K),
                     cfg.P.empty() ? db_to_linear(10.0) : cfg.P.front());
    }
}

json assumptions_block(const SystemConfig& cfg, const PresetSpec& spec,
                       const std::string& preset) {
    json a;
    a["aperture_radius_m"] = cfg.a;
    a["beam_radius_m"] = cfg.w_d;
    a["noise_power"] = cfg.N_o;
    a["desired_power_linear"] = cfg.P;
    a["kappa"] = cfg.kappa_source.is_table
                     ? json{{"table_csv", cfg.kappa_source.table_path}}
                     : json{{"constant_per_m", cfg.kappa_source.constant}};
    if (preset == "fig2") a["distance_m"] = cfg.d;  // caption omits d
    if (preset == "fig3" || preset == "fig4") a["carrier_index"] = spec.focus_carrier;
    if (preset == "fig3") a["beam_radius_fixed_over_distance"] = true;
    return a;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error("config validation failed:\n  " + [&errors] {
          std::string joined;
          for (std::size_t i = 0; i < errors.size(); ++i) {
              if (i) joined += "\n  ";
              joined += errors[i];
          }
          return joined;
      }()),
      errors_(std::move(errors)) {}

ParsedConfig parse_config(const json& doc) {
    if (!doc.is_object()) {
        throw ConfigError({"/: document must be a JSON object"});
    }
    Checker c{doc, {}, {}};
    ParsedConfig out;
    SystemConfig& cfg = out.config;

    cfg.K = static_cast<int>(c.number("k_carriers", 10, true));
    cfg.W_sb = c.number("signal_bandwidth_hz", 2e9, true);
    cfg.W_gb = c.number("guard_bandwidth_hz", 0.5e6, true);
    cfg.f_c = c.number("center_frequency_hz", 335e9, true);
    cfg.d = c.number("distance_m", 10.0, true);
    cfg.G_t = c.power_like("tx_gain_dbi", "tx_gain_linear", 1.0, true);
    cfg.G_r = c.power_like("rx_gain_dbi", "rx_gain_linear", 1.0, true);
    cfg.N_o = c.number("noise_power", 1.0);
    cfg.m = c.number("nakagami_m", 4.0);
    cfg.Omega = c.number("omega", 1.0);
    cfg.sigma_s = c.number("sigma_s_m", 0.0, true);
    cfg.a = c.number("aperture_radius_m", 0.05, true);
    cfg.w_d = c.number("beam_radius_m", 0.05, true);
    cfg.beta = c.number("beta_hz", 0.0, true);
    cfg.r = c.number("rate_bps_hz", 1.0);
    cfg.n_trials = c.unsigned_int("n_trials", 100000);
    cfg.seed = c.unsigned_int("seed", 1);
    cfg.share_hp = c.boolean("share_hp", true);
    cfg.share_hf = c.boolean("share_hf", false);

    // power: scalar (replicated over K) or K-element array, dB or linear
    {
        const bool has_db = c.has("power_db");
        const bool has_lin = c.has("power_linear");
        if (has_db && has_lin) {
            c.err("/power_linear", "conflicts with /power_db; give exactly one");
        } else if (!has_db && !has_lin) {
            c.err("/power_db", "required (or /power_linear)");
        } else {
            const std::string key = has_db ? "power_db" : "power_linear";
            const json& v = doc[key];
            std::vector<double> p;
            if (v.is_number()) {
                p.assign(static_cast<std::size_t>(std::max(cfg.K, 0)),
                         v.get<double>());
            } else if (v.is_array()) {
                for (const auto& e : v) {
                    if (!e.is_number()) {
                        c.err("/" + key, "array entries must be numbers");
                        break;
                    }
                    p.push_back(e.get<double>());
                }
            } else {
                c.err("/" + key, "must be a number or an array of K numbers");
            }
            if (has_db) {
                for (double& e : p) e = db_to_linear(e);
            }
            cfg.P = std::move(p);
        }
    }
    {
        const double adj =
            c.power_like("adjacent_power_db", "adjacent_power_linear", -1.0, false);
        cfg.p_adjacent = adj;
    }

    if (c.has("kappa")) {
        const json& k = doc["kappa"];
        if (!k.is_object()) {
            c.err("/kappa", "must be an object");
        } else {
            const bool has_const = k.contains("constant_per_m");
            const bool has_table = k.contains("table_csv");
            for (const auto& [key, _] : k.items()) {
                if (key != "constant_per_m" && key != "table_csv") {
                    c.err("/kappa/" + key, "unknown key");
                }
            }
            if (has_const == has_table) {
                c.err("/kappa", "give exactly one of constant_per_m or table_csv");
            } else if (has_const) {
                if (!k["constant_per_m"].is_number()) {
                    c.err("/kappa/constant_per_m", "must be a number");
                } else {
                    cfg.kappa_source.is_table = false;
                    cfg.kappa_source.constant = k["constant_per_m"].get<double>();
                }
            } else {
                if (!k["table_csv"].is_string()) {
                    c.err("/kappa/table_csv", "must be a string");
                } else {
                    cfg.kappa_source.is_table = true;
                    cfg.kappa_source.table_path = k["table_csv"].get<std::string>();
                }
            }
        }
    }

    {
        const std::string mode = c.text("threshold_mode", "paper");
        if (mode == "paper") {
            cfg.threshold_mode = ThresholdMode::paper;
        } else if (mode == "shannon") {
            cfg.threshold_mode = ThresholdMode::shannon;
        } else {
            c.err("/threshold_mode", "must be \"paper\" or \"shannon\"");
        }
    }
    {
        const std::string model = c.text("ici_model", "analytic");
        if (model == "analytic") {
            out.run.ici_model = IciModel::analytic;
        } else if (model == "empirical") {
            out.run.ici_model = IciModel::empirical;
        } else if (model == "fixed") {
            out.run.ici_model = IciModel::fixed;
        } else {
            c.err("/ici_model", "must be \"analytic\", \"empirical\" or \"fixed\"");
        }
        out.run.fixed_A = c.number("ici_fixed_A", 0.0);
        if (out.run.ici_model == IciModel::fixed &&
            (out.run.fixed_A < 0.0 || out.run.fixed_A > 1.0)) {
            c.err("/ici_fixed_A", "must be in [0, 1]");
        }
    }
    out.run.n_workers = static_cast<std::size_t>(c.unsigned_int("workers", 0));
    out.run.auto_escalate = c.boolean("auto_escalate", true);

    for (const auto& [key, _] : doc.items()) {
        if (!c.known.count(key)) {
            c.err("/" + key, "unknown key");
        }
    }

    if (c.errors.empty()) {
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            c.err("/", e.what());
        }
    }
    if (!c.errors.empty()) {
        throw ConfigError(std::move(c.errors));
    }
    for (const auto& key : c.known) {
        if (doc.contains(key)) out.present_keys.insert(key);
    }
    return out;
}

ParsedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError({"/: cannot open " + path});
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("/: JSON parse error: ") + e.what()});
    }
    return parse_config(doc);
}

json resolved_config_json(const SystemConfig& config, const RunOptions& run) {
    json j;
    j["k_carriers"] = config.K;
    j["signal_bandwidth_hz"] = config.W_sb;
    j["guard_bandwidth_hz"] = config.W_gb;
    j["center_frequency_hz"] = config.f_c;
    j["distance_m"] = config.d;
    j["tx_gain_linear"] = config.G_t;
    j["rx_gain_linear"] = config.G_r;
    j["power_linear"] = config.P;
    if (config.p_adjacent >= 0.0) j["adjacent_power_linear"] = config.p_adjacent;
    j["noise_power"] = config.N_o;
    j["nakagami_m"] = config.m;
    j["omega"] = config.Omega;
    j["sigma_s_m"] = config.sigma_s;
    j["aperture_radius_m"] = config.a;
    j["beam_radius_m"] = config.w_d;
    j["beta_hz"] = config.beta;
    j["rate_bps_hz"] = config.r;
    j["n_trials"] = config.n_trials;
    j["seed"] = config.seed;
    j["kappa"] = config.kappa_source.is_table
                     ? json{{"table_csv", config.kappa_source.table_path}}
                     : json{{"constant_per_m", config.kappa_source.constant}};
    j["share_hp"] = config.share_hp;
    j["share_hf"] = config.share_hf;
    j["threshold_mode"] =
        config.threshold_mode == ThresholdMode::paper ? "paper" : "shannon";
    switch (run.ici_model) {
        case IciModel::analytic: j["ici_model"] = "analytic"; break;
        case IciModel::empirical: j["ici_model"] = "empirical"; break;
        case IciModel::fixed: j["ici_model"] = "fixed"; break;
    }
    if (run.ici_model == IciModel::fixed) j["ici_fixed_A"] = run.fixed_A;
    j["workers"] = run.n_workers;
    j["auto_escalate"] = run.auto_escalate;
    return j;
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig3", "fig4", "custom"};
}

PresetResult run_preset(const std::string& name, const ParsedConfig& parsed,
                        const std::string& out_dir) {
    const auto names = preset_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw std::invalid_argument("unknown experiment preset: " + name);
    }
    const auto t0 = std::chrono::steady_clock::now();
    fs::create_directories(out_dir);

    SystemConfig cfg = parsed.config;
    const PresetSpec spec = preset_spec(name);
    if (name != "custom") {
        lock_paper_constants(name, cfg, parsed.present_keys);
        cfg.validate();
    }

    std::ostringstream csv;
    std::size_t rows = 0;
    bool any_escalated = false;
    const auto row = [&](std::initializer_list<double> values) {
        bool first = true;
        for (double v : values) {
            if (!first) csv << ',';
            csv << fmt(v);
            first = false;
        }
        csv << '\n';
        ++rows;
    };

    if (name == "fig1") {
        csv << "f_k_hz,beta_hz,p_adj_db,mean_sinr_db,ci_db,mean_of_db\n";
        for (double beta : spec.betas_hz) {
            for (double padj : spec.p_adj_db) {
                SystemConfig c = cfg;
                c.beta = beta;
                c.p_adjacent = db_to_linear(padj);
                Engine engine(c, parsed.run);
                const auto est = engine.run_average_sinr();
                const auto& grid = engine.grid();
                for (std::size_t i = 0; i < est.mean_linear.size(); ++i) {
                    const auto& e = est.mean_linear[i];
                    row({grid.centers[i], beta, padj, linear_to_db(e.value),
                         ci_db(e.value, e.half_width), est.mean_db[i].value});
                }
            }
        }
    } else if (name == "fig2") {
        csv << "f_k_hz,beta_hz,p_adj_db,op,ci\n";
        for (double beta : spec.betas_hz) {
            for (double padj : spec.p_adj_db) {
                SystemConfig c = cfg;
                c.beta = beta;
                c.p_adjacent = db_to_linear(padj);
                Engine engine(c, parsed.run);
                const auto est = engine.run_outage();
                any_escalated |= est.escalated;
                const auto& grid = engine.grid();
                for (std::size_t i = 0; i < est.op.size(); ++i) {
                    row({grid.centers[i], beta, padj, est.op[i].value,
                         est.op[i].half_width});
                }
            }
        }
    } else if (name == "fig3") {
        csv << "d_m,sigma_s_m,mean_sinr_db,ci_db,mean_of_db\n";
        cfg.beta = spec.betas_hz.front();
        cfg.p_adjacent = db_to_linear(spec.p_adj_db.front());
        for (double d : spec.distances_m) {
            for (double sigma : spec.sigma_s_m) {
                SystemConfig c = cfg;
                c.d = d;
                c.sigma_s = sigma;
                Engine engine(c, parsed.run);
                const auto est = engine.run_average_sinr();
                const std::size_t pos = engine.grid().position(spec.focus_carrier);
                const auto& e = est.mean_linear[pos];
                row({d, sigma, linear_to_db(e.value), ci_db(e.value, e.half_width),
                     est.mean_db[pos].value});
            }
        }
    } else if (name == "fig4") {
        csv << "gamma_th_db,sigma_s_m,op,ci\n";
        cfg.beta = spec.betas_hz.front();
        cfg.p_adjacent = db_to_linear(spec.p_adj_db.front());
        std::vector<double> gammas;
        gammas.reserve(spec.gamma_th_db.size());
        for (double g : spec.gamma_th_db) gammas.push_back(db_to_linear(g));
        for (double sigma : spec.sigma_s_m) {
            SystemConfig c = cfg;
            c.sigma_s = sigma;
            Engine engine(c, parsed.run);
            const auto curve = engine.run_outage_curve(gammas);
            const std::size_t pos = engine.grid().position(spec.focus_carrier);
            for (std::size_t g = 0; g < curve.size(); ++g) {
                any_escalated |= curve[g].escalated;
                row({spec.gamma_th_db[g], sigma, curve[g].op[pos].value,
                     curve[g].op[pos].half_width});
            }
        }
    } else {  // custom
        csv << "f_k_hz,mean_sinr_linear,mean_sinr_db,ci_db,mean_of_db,op,op_ci\n";
        Engine engine(cfg, parsed.run);
        const auto sinr = engine.run_average_sinr();
        const auto op = engine.run_outage();
        any_escalated |= op.escalated;
        const auto& grid = engine.grid();
        for (std::size_t i = 0; i < sinr.mean_linear.size(); ++i) {
            const auto& e = sinr.mean_linear[i];
            row({grid.centers[i], e.value, linear_to_db(e.value),
                 ci_db(e.value, e.half_width), sinr.mean_db[i].value,
                 op.op[i].value, op.op[i].half_width});
        }
    }

    const fs::path csv_path = fs::path(out_dir) / (name + ".csv");
    atomic_write(csv_path, csv.str());

    const auto t1 = std::chrono::steady_clock::now();
    json manifest;
    manifest["experiment"] = name;
    manifest["seed"] = cfg.seed;
    manifest["n_trials"] = cfg.n_trials;
    manifest["wall_time_s"] =
        std::chrono::duration<double>(t1 - t0).count();
    manifest["versions"] = {{"thzlink", kVersion}, {"compiler", __VERSION__}};
    manifest["worker_count"] = resolve_worker_count(parsed.run.n_workers);
    manifest["resolved_config"] = resolved_config_json(cfg, parsed.run);
    manifest["assumptions"] = assumptions_block(cfg, spec, name);
    manifest["outputs"] = {csv_path.filename().string()};
    manifest["rows"] = rows;
    manifest["any_escalated"] = any_escalated;

    const fs::path manifest_path = fs::path(out_dir) / (name + "_manifest.json");
    atomic_write(manifest_path, manifest.dump(2) + "\n");

    PresetResult res;
    res.name = name;
    res.csv_path = csv_path.string();
    res.manifest_path = manifest_path.string();
    res.rows = rows;
    res.any_escalated = any_escalated;
    return res;
}

}  // namespace thz
