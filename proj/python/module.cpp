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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "thzlink/channel.hpp"
#include "thzlink/config.hpp"
#include "thzlink/experiments.hpp"
#include "thzlink/fading.hpp"
#include "thzlink/mc_engine.hpp"
#include "thzlink/misalignment.hpp"
#include "thzlink/phase_noise.hpp"

namespace py = pybind11;
using namespace thz;

namespace {

ParsedConfig parse_config_str(const std::string& text) {
    return parse_config(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_thzlink, m) {
    m.doc() = "Monte Carlo simulator for multi-carrier THz downlinks under "
              "misalignment fading and LO phase noise";

    py::register_exception<ConfigError>(m, "ConfigError");

    py::enum_<ThresholdMode>(m, "ThresholdMode")
        .value("paper", ThresholdMode::paper)
        .value("shannon", ThresholdMode::shannon);

    py::enum_<IciModel>(m, "IciModel")
        .value("analytic", IciModel::analytic)
        .value("empirical", IciModel::empirical)
        .value("fixed", IciModel::fixed);

    py::class_<CarrierGrid>(m, "CarrierGrid")
        .def_readonly("indices", &CarrierGrid::indices)
        .def_readonly("centers", &CarrierGrid::centers)
        .def_readonly("band_lo", &CarrierGrid::band_lo)
        .def_readonly("band_hi", &CarrierGrid::band_hi)
        .def("contains", &CarrierGrid::contains);

    py::class_<BeamGeometry>(m, "BeamGeometry")
        .def_readonly("v", &BeamGeometry::v)
        .def_readonly("A0", &BeamGeometry::A0)
        .def_readonly("w_eq", &BeamGeometry::w_eq)
        .def_readonly("gamma_ratio", &BeamGeometry::gamma_ratio);

    py::class_<MetricEstimate>(m, "MetricEstimate")
        .def_readonly("value", &MetricEstimate::value)
        .def_readonly("n", &MetricEstimate::n)
        .def_readonly("half_width", &MetricEstimate::half_width)
        .def_readonly("seed", &MetricEstimate::seed);

    py::class_<SinrEstimates>(m, "SinrEstimates")
        .def_readonly("mean_linear", &SinrEstimates::mean_linear)
        .def_readonly("mean_db", &SinrEstimates::mean_db);

    py::class_<OutageEstimates>(m, "OutageEstimates")
        .def_readonly("op", &OutageEstimates::op)
        .def_readonly("gamma_th", &OutageEstimates::gamma_th)
        .def_readonly("escalated", &OutageEstimates::escalated)
        .def_readonly("low_failure_warning", &OutageEstimates::low_failure_warning);

    py::class_<EmpiricalIci>(m, "EmpiricalIci")
        .def_readonly("adjacent", &EmpiricalIci::adjacent)
        .def_readonly("total_out_of_band", &EmpiricalIci::total_out_of_band)
        .def_readonly("bin_width_hz", &EmpiricalIci::bin_width_hz);

    py::class_<ParsedConfig>(m, "Config")
        .def_static("from_json", &parse_config_str, py::arg("text"))
        .def_static("from_file", &load_config, py::arg("path"))
        .def_property_readonly("resolved_json", [](const ParsedConfig& p) {
            return resolved_config_json(p.config, p.run).dump(2);
        })
        .def_property(
            "seed", [](const ParsedConfig& p) { return p.config.seed; },
            [](ParsedConfig& p, std::uint64_t s) { p.config.seed = s; })
        .def_property(
            "n_trials", [](const ParsedConfig& p) { return p.config.n_trials; },
            [](ParsedConfig& p, std::uint64_t n) { p.config.n_trials = n; });

    py::class_<Engine>(m, "Engine")
        .def(py::init([](const ParsedConfig& p) { return Engine(p.config, p.run); }))
        .def_property_readonly("grid", &Engine::grid)
        .def_property_readonly("adjacent_A", &Engine::adjacent_A)
        .def("run_average_sinr", &Engine::run_average_sinr,
             py::call_guard<py::gil_scoped_release>())
        .def("run_outage", py::overload_cast<double>(&Engine::run_outage, py::const_),
             py::arg("gamma_th"), py::call_guard<py::gil_scoped_release>())
        .def("run_outage", py::overload_cast<>(&Engine::run_outage, py::const_),
             py::call_guard<py::gil_scoped_release>())
        .def("run_outage_curve", &Engine::run_outage_curve, py::arg("gamma_ths"),
             py::call_guard<py::gil_scoped_release>());

    py::class_<PresetResult>(m, "PresetResult")
        .def_readonly("name", &PresetResult::name)
        .def_readonly("csv_path", &PresetResult::csv_path)
        .def_readonly("manifest_path", &PresetResult::manifest_path)
        .def_readonly("rows", &PresetResult::rows);

    m.def("build_grid", [](const ParsedConfig& p) { return build_grid(p.config); });
    m.def("neighbor_indicator", &neighbor_indicator, py::arg("grid"), py::arg("j"));
    m.def("threshold_from_rate", &threshold_from_rate, py::arg("r"),
          py::arg("mode") = ThresholdMode::paper);
    m.def("friis_amplitude", &friis_amplitude, py::arg("f_hz"), py::arg("d_m"),
          py::arg("G_t"), py::arg("G_r"));
    m.def("derive_beam", &derive_beam, py::arg("a"), py::arg("w_d"),
          py::arg("sigma_s"));
    m.def("pdf_hp", &pdf_hp, py::arg("x"), py::arg("geom"));
    m.def("cdf_hp", &cdf_hp, py::arg("x"), py::arg("geom"));
    m.def(
        "pdf_nakagami",
        [](double x, double m_, double omega) {
            return pdf_nakagami(x, NakagamiParams{m_, omega});
        },
        py::arg("x"), py::arg("m"), py::arg("omega") = 1.0);
    m.def(
        "cdf_nakagami",
        [](double x, double m_, double omega) {
            return cdf_nakagami(x, NakagamiParams{m_, omega});
        },
        py::arg("x"), py::arg("m"), py::arg("omega") = 1.0);
    m.def("lorentzian_psd", &lorentzian_psd, py::arg("f_hz"), py::arg("beta_hz"));
    m.def(
        "ici_coeff_analytic",
        [](double beta, const ParsedConfig& p, int offset) {
            return ici_coeff_analytic(beta, build_grid(p.config), offset);
        },
        py::arg("beta_hz"), py::arg("config"), py::arg("offset") = 1);
    m.def(
        "ici_coeff_empirical",
        [](double beta, const ParsedConfig& p, std::size_t n_samples,
           std::size_t n_avg, std::uint64_t seed) {
            return ici_coeff_empirical(beta, build_grid(p.config), n_samples, n_avg,
                                       seed);
        },
        py::arg("beta_hz"), py::arg("config"), py::arg("n_samples"),
        py::arg("n_avg") = 16, py::arg("seed") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "semi_analytic_op_no_phn",
        [](const ParsedConfig& p, double gamma_th) {
            return semi_analytic_op_no_phn(p.config, gamma_th);
        },
        py::arg("config"), py::arg("gamma_th"));
    m.def("run_preset", &run_preset, py::arg("name"), py::arg("config"),
          py::arg("out_dir"), py::call_guard<py::gil_scoped_release>());
}
