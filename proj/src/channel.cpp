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

#include "thzlink/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thz {

namespace {
constexpr double kFourPi = 12.566370614359172953850573533118;
}

AbsorptionProvider AbsorptionProvider::constant(double kappa) {
    if (kappa < 0.0) {
        throw std::invalid_argument("AbsorptionProvider: kappa must be >= 0");
    }
    AbsorptionProvider p;
    p.is_table_ = false;
    p.constant_ = kappa;
    return p;
}

AbsorptionProvider AbsorptionProvider::table(std::vector<double> freqs_hz,
                                             std::vector<double> kappas) {
    if (freqs_hz.size() != kappas.size()) {
        throw std::invalid_argument("AbsorptionProvider: column lengths differ");
    }
    if (freqs_hz.size() < 2) {
        throw std::invalid_argument("AbsorptionProvider: table needs >= 2 rows");
    }
    for (std::size_t i = 0; i < freqs_hz.size(); ++i) {
        if (i > 0 && !(freqs_hz[i] > freqs_hz[i - 1])) {
            throw std::invalid_argument(
                "AbsorptionProvider: frequencies must be strictly increasing");
        }
        if (kappas[i] < 0.0) {
            throw std::invalid_argument("AbsorptionProvider: negative kappa in table");
        }
    }
    AbsorptionProvider p;
    p.is_table_ = true;
    p.freqs_ = std::move(freqs_hz);
    p.kappas_ = std::move(kappas);
    return p;
}

AbsorptionProvider AbsorptionProvider::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("AbsorptionProvider: cannot open " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("AbsorptionProvider: empty file " + path);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "frequency_hz,kappa_per_m") {
        throw std::runtime_error("AbsorptionProvider: bad header in " + path +
                                 " (expected 'frequency_hz,kappa_per_m')");
    }
    std::vector<double> freqs;
    std::vector<double> kappas;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string a;
        std::string b;
        if (!std::getline(row, a, ',') || !std::getline(row, b)) {
            throw std::runtime_error("AbsorptionProvider: malformed row " +
                                     std::to_string(line_no) + " in " + path);
        }
        freqs.push_back(std::stod(a));
        kappas.push_back(std::stod(b));
    }
    return table(std::move(freqs), std::move(kappas));
}

AbsorptionProvider AbsorptionProvider::from_source(const KappaSource& src) {
    return src.is_table ? from_csv(src.table_path) : constant(src.constant);
}

double AbsorptionProvider::kappa(double f_hz) const {
    if (!is_table_) return constant_;
    if (f_hz < freqs_.front() || f_hz > freqs_.back()) {
        throw std::out_of_range("AbsorptionProvider: frequency outside table range");
    }
    const auto it = std::lower_bound(freqs_.begin(), freqs_.end(), f_hz);
    const std::size_t hi = static_cast<std::size_t>(it - freqs_.begin());
    if (hi == 0) return kappas_.front();
    const std::size_t lo = hi - 1;
    const double t = (f_hz - freqs_[lo]) / (freqs_[hi] - freqs_[lo]);
    return kappas_[lo] + t * (kappas_[hi] - kappas_[lo]);
}

double friis_amplitude(double f_hz, double d_m, double G_t, double G_r) {
    if (!(f_hz > 0.0) || !(d_m > 0.0) || !(G_t > 0.0) || !(G_r > 0.0)) {
        throw std::invalid_argument("friis_amplitude: all inputs must be > 0");
    }
    return std::sqrt(G_t * G_r) * kSpeedOfLight / (kFourPi * f_hz * d_m);
}

double absorption_amplitude(const AbsorptionProvider& provider, double f_hz, double d_m) {
    if (!(d_m > 0.0)) {
        throw std::invalid_argument("absorption_amplitude: d must be > 0");
    }
    return std::exp(-provider.kappa(f_hz) * d_m / 2.0);
}

DeterministicGain deterministic_gain(const AbsorptionProvider& provider, double f_hz,
                                     double d_m, double G_t, double G_r) {
    DeterministicGain g;
    g.h_fl = friis_amplitude(f_hz, d_m, G_t, G_r);
    g.h_al = absorption_amplitude(provider, f_hz, d_m);
    g.h_l = g.h_fl * g.h_al;
    return g;
}

}  // namespace thz
