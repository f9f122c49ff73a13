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

#include "thzlink/config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace thz {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw std::invalid_argument("SystemConfig." + field + ": " + why);
}

}  // namespace

void SystemConfig::validate() const {
    if (K < 2) fail("K", "must be >= 2");
    if (K % 2 != 0) fail("K", "must be even (got " + std::to_string(K) + ")");
    if (!(W_sb > 0.0)) fail("W_sb", "must be > 0");
    if (!(W_gb > 0.0)) fail("W_gb", "must be > 0");
    if (!(f_c > 0.0)) fail("f_c", "must be > 0");
    if (!(d > 0.0)) fail("d", "must be > 0");
    if (!(G_t > 0.0)) fail("G_t", "must be > 0");
    if (!(G_r > 0.0)) fail("G_r", "must be > 0");
    if (!(N_o > 0.0)) fail("N_o", "must be > 0");
    if (!(Omega > 0.0)) fail("Omega", "must be > 0");
    if (!(m >= 0.5)) fail("m", "must be >= 0.5");
    if (sigma_s < 0.0) fail("sigma_s", "must be >= 0");
    if (!(a > 0.0)) fail("a", "must be > 0");
    if (!(w_d > 0.0)) fail("w_d", "must be > 0");
    if (beta < 0.0) fail("beta", "must be >= 0");
    if (!(r > 0.0)) fail("r", "must be > 0");
    if (P.size() != static_cast<std::size_t>(K))
        fail("P", "must have exactly K = " + std::to_string(K) + " entries, got " +
                      std::to_string(P.size()));
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (!(P[i] > 0.0)) fail("P[" + std::to_string(i) + "]", "must be > 0");
    }
    if (!kappa_source.is_table && kappa_source.constant < 0.0)
        fail("kappa_source.constant", "must be >= 0");
}

std::size_t CarrierGrid::position(int j) const {
    if (!contains(j)) {
        throw std::out_of_range("CarrierGrid: carrier index " + std::to_string(j) +
                                " not in grid (K = " + std::to_string(K()) + ")");
    }
    const int half = K() / 2;
    return static_cast<std::size_t>(j < 0 ? j + half : j + half - 1);
}

CarrierGrid build_grid(const SystemConfig& config) {
    config.validate();
    const int half = config.K / 2;
    const double w_ch = config.W_ch();

    CarrierGrid grid;
    grid.W_sb = config.W_sb;
    grid.W_gb = config.W_gb;
    grid.indices.reserve(config.K);
    grid.centers.reserve(config.K);
    grid.band_lo.reserve(config.K);
    grid.band_hi.reserve(config.K);
    for (int k = -half; k <= half; ++k) {
        if (k == 0) continue;
        const double sign = k < 0 ? -1.0 : 1.0;
        const double f_k = config.f_c + sign * (std::abs(k) - 0.5) * w_ch;
        grid.indices.push_back(k);
        grid.centers.push_back(f_k);
        grid.band_lo.push_back(f_k - config.W_sb / 2.0);
        grid.band_hi.push_back(f_k + config.W_sb / 2.0);
    }
    return grid;
}

int neighbor_indicator(const CarrierGrid& grid, int j) {
    return grid.contains(j) ? 1 : 0;
}

double threshold_from_rate(double r, ThresholdMode mode) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("threshold_from_rate: r must be > 0");
    }
    return mode == ThresholdMode::paper ? std::exp2(r - 1.0) : std::exp2(r) - 1.0;
}

}  // namespace thz
