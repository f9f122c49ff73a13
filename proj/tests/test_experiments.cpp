#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "thzlink/experiments.hpp"

using namespace thz;
using nlohmann::json;

namespace {

json minimal_doc() {
    return json{
        {"k_carriers", 10},
        {"signal_bandwidth_hz", 2e9},
        {"guard_bandwidth_hz", 0.5e6},
        {"center_frequency_hz", 335e9},
        {"distance_m", 10.0},
        {"tx_gain_dbi", 55.0},
        {"rx_gain_dbi", 55.0},
        {"power_db", 10.0},
        {"sigma_s_m", 0.01},
        {"aperture_radius_m", 0.05},
        {"beam_radius_m", 0.05},
        {"beta_hz", 1.5e9},
    };
}

bool has_error_containing(const ConfigError& e, const std::string& needle) {
    for (const auto& msg : e.errors()) {
        if (msg.find(needle) != std::string::npos) return true;
    }
    return false;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("minimal document parses with documented defaults") {
    const auto parsed = parse_config(minimal_doc());
    const auto& cfg = parsed.config;
    CHECK(cfg.K == 10);
    CHECK(cfg.G_t == doctest::Approx(316227.7660168379).epsilon(1e-12));
    CHECK(cfg.G_r == cfg.G_t);
    REQUIRE(cfg.P.size() == 10);
    CHECK(cfg.P[0] == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(cfg.N_o == 1.0);
    CHECK(cfg.m == 4.0);
    CHECK(cfg.Omega == 1.0);
    CHECK(cfg.r == 1.0);
    CHECK(cfg.n_trials == 100000);
    CHECK(cfg.seed == 1);
    CHECK(cfg.p_adjacent < 0.0);
    CHECK(cfg.threshold_mode == ThresholdMode::paper);
    CHECK(cfg.kappa_source.is_table == false);
    CHECK(parsed.run.ici_model == IciModel::analytic);
    CHECK(parsed.run.n_workers == 0);
    CHECK(parsed.run.auto_escalate == true);
    CHECK(parsed.present_keys.count("beta_hz") == 1);
    CHECK(parsed.present_keys.count("nakagami_m") == 0);
}

TEST_CASE("linear and dB spellings agree") {
    auto doc = minimal_doc();
    doc.erase("tx_gain_dbi");
    doc["tx_gain_linear"] = std::pow(10.0, 5.5);
    doc.erase("power_db");
    doc["power_linear"] = std::vector<double>(10, 10.0);
    doc["adjacent_power_db"] = 5.0;
    const auto parsed = parse_config(doc);
    CHECK(parsed.config.G_t == doctest::Approx(316227.7660168379).epsilon(1e-12));
    CHECK(parsed.config.P[3] == 10.0);
    CHECK(parsed.config.p_adjacent ==
          doctest::Approx(std::pow(10.0, 0.5)).epsilon(1e-12));
}

TEST_CASE("schema violations come back with JSON-pointer paths") {
    SUBCASE("unknown key") {
        auto doc = minimal_doc();
        doc["frobnicate"] = 1;
        try {
            parse_config(doc);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(has_error_containing(e, "/frobnicate"));
        }
    }
    SUBCASE("both unit spellings of one field") {
        auto doc = minimal_doc();
        doc["tx_gain_linear"] = 1.0;
        try {
            parse_config(doc);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(has_error_containing(e, "/tx_gain_linear"));
        }
    }
    SUBCASE("missing required field") {
        auto doc = minimal_doc();
        doc.erase("beta_hz");
        try {
            parse_config(doc);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(has_error_containing(e, "/beta_hz"));
        }
    }
    SUBCASE("odd carrier count") {
        auto doc = minimal_doc();
        doc["k_carriers"] = 7;
        try {
            parse_config(doc);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(has_error_containing(e, "K"));
        }
    }
    SUBCASE("power array of the wrong length") {
        auto doc = minimal_doc();
        doc.erase("power_db");
        doc["power_linear"] = std::vector<double>(7, 1.0);
        CHECK_THROWS_AS(parse_config(doc), ConfigError);
    }
    SUBCASE("kappa with both sources") {
        auto doc = minimal_doc();
        doc["kappa"] = {{"constant_per_m", 0.005}, {"table_csv", "x.csv"}};
        try {
            parse_config(doc);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(has_error_containing(e, "/kappa"));
        }
    }
    SUBCASE("bad threshold mode") {
        auto doc = minimal_doc();
        doc["threshold_mode"] = "nyquist";
        try {
            parse_config(doc);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(has_error_containing(e, "/threshold_mode"));
        }
    }
    SUBCASE("multiple violations are all reported") {
        auto doc = minimal_doc();
        doc["frobnicate"] = 1;
        doc["threshold_mode"] = "nyquist";
        try {
            parse_config(doc);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.errors().size() >= 2);
        }
    }
}

TEST_CASE("resolved echo round-trips to an identical document") {
    auto doc = minimal_doc();
    doc["kappa"] = {{"constant_per_m", 0.005}};
    doc["adjacent_power_db"] = 5.0;
    doc["seed"] = 99u;
    const auto p1 = parse_config(doc);
    const json echo = resolved_config_json(p1.config, p1.run);
    const auto p2 = parse_config(echo);
    const json echo2 = resolved_config_json(p2.config, p2.run);
    CHECK(echo == echo2);
    CHECK(p1.config.G_t == p2.config.G_t);
    CHECK(p1.config.P == p2.config.P);
    CHECK(p1.config.p_adjacent == p2.config.p_adjacent);
}

TEST_CASE("load_config reports unreadable and malformed files") {
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
    const std::string path = "bad_config_tmp.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_config(path), ConfigError);
    std::filesystem::remove(path);
}

TEST_CASE("unknown preset name is rejected") {
    const auto parsed = parse_config(minimal_doc());
    CHECK_THROWS_AS(run_preset("fig9", parsed, "preset_out_tmp"),
                    std::invalid_argument);
    const auto names = preset_names();
    CHECK(std::find(names.begin(), names.end(), "fig1") != names.end());
    CHECK(std::find(names.begin(), names.end(), "custom") != names.end());
}

TEST_CASE("fig1 preset: row count, header and byte-stable reruns") {
    auto doc = minimal_doc();
    doc["n_trials"] = 1000u;
    doc["seed"] = 7u;
    doc["kappa"] = {{"constant_per_m", 0.005}};
    const auto parsed = parse_config(doc);
    const std::string out_dir = "preset_out_tmp";
    const auto res = run_preset("fig1", parsed, out_dir);
    CHECK(res.rows == 60);  // 3 linewidths x 2 interferer powers x 10 carriers
    const std::string csv = slurp(res.csv_path);
    CHECK(csv.rfind("f_k_hz,beta_hz,p_adj_db,mean_sinr_db,ci_db,mean_of_db\n", 0) == 0);

    const auto manifest = json::parse(slurp(res.manifest_path));
    CHECK(manifest["experiment"] == "fig1");
    CHECK(manifest["seed"] == 7);
    CHECK(manifest["rows"] == 60);
    CHECK(manifest["resolved_config"]["beta_hz"] == 1.5e9);
    CHECK(manifest["assumptions"].contains("aperture_radius_m"));

    const auto res2 = run_preset("fig1", parsed, out_dir);
    CHECK(slurp(res2.csv_path) == csv);
    std::filesystem::remove_all(out_dir);
}

TEST_CASE("custom preset runs the config as given") {
    auto doc = minimal_doc();
    doc["n_trials"] = 1000u;
    doc["rate_bps_hz"] = 3.0;
    doc["kappa"] = {{"constant_per_m", 0.005}};
    doc["adjacent_power_db"] = 5.0;
    const auto parsed = parse_config(doc);
    const std::string out_dir = "preset_custom_tmp";
    const auto res = run_preset("custom", parsed, out_dir);
    CHECK(res.rows == 10);
    const std::string csv = slurp(res.csv_path);
    CHECK(csv.rfind("f_k_hz,mean_sinr_linear,", 0) == 0);
    std::filesystem::remove_all(out_dir);
}
