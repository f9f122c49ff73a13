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

#include <string>
#include <vector>

#include "thzlink/config.hpp"

namespace thz {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Molecular absorption coefficient kappa(f), 1/m: a constant or a table
// with linear interpolation. Queries outside the table range are rejected,
// not extrapolated.
class AbsorptionProvider {
public:
    static AbsorptionProvider constant(double kappa);
    static AbsorptionProvider table(std::vector<double> freqs_hz,
                                    std::vector<double> kappas);
    // CSV with header "frequency_hz,kappa_per_m"; LF or CRLF.
    static AbsorptionProvider from_csv(const std::string& path);
    static AbsorptionProvider from_source(const KappaSource& src);

    double kappa(double f_hz) const;

private:
    AbsorptionProvider() = default;
    bool is_table_ = false;
    double constant_ = 0.0;
    std::vector<double> freqs_;
    std::vector<double> kappas_;
};

struct DeterministicGain {
    double h_fl = 0.0;  // Friis amplitude gain
    double h_al = 0.0;  // absorption amplitude gain, in (0, 1]
    double h_l = 0.0;   // product
};

// Amplitude convention: received power scales as h_fl^2.
double friis_amplitude(double f_hz, double d_m, double G_t, double G_r);

// h_al = exp(-kappa(f) * d / 2), so power attenuates as exp(-kappa d).
double absorption_amplitude(const AbsorptionProvider& provider, double f_hz, double d_m);

DeterministicGain deterministic_gain(const AbsorptionProvider& provider, double f_hz,
                                     double d_m, double G_t, double G_r);

}  // namespace thz
