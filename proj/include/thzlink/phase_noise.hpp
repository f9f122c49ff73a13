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

#include <cstdint>
#include <vector>

#include "thzlink/config.hpp"
#include "thzlink/rng.hpp"

namespace thz {

// Free-running LO phase noise: Wiener phase sampled at the total bandwidth W,
// increment variance sigma_eps2 = 4 pi beta / W.
struct PhaseNoiseParams {
    double beta = 0.0;        // LO 3-dB bandwidth, Hz
    double W = 0.0;           // process sample rate = total bandwidth, Hz
    double sigma_eps2 = 0.0;  // rad^2

    static PhaseNoiseParams make(double beta, double W);
};

// phi(0) = 0; increments i.i.d. Gaussian(0, sigma_eps2).
std::vector<double> wiener_trace(std::size_t n, const PhaseNoiseParams& params,
                                 RandomStream& rng);

// S(f) = (beta/pi) / (beta^2 + f^2); unit area, 3-dB points at f = +/-beta.
double lorentzian_psd(double f_hz, double beta_hz);

// Per-ordered-pair leakage fractions A (source j into victim k = j -/+ 1,
// index-arithmetic adjacency, index 0 skipped by grid membership).
struct IciCoefficients {
    struct Entry {
        int source;
        int victim;
        double A;
    };
    std::vector<Entry> entries;

    // 0 when the pair is absent.
    double A(int source, int victim) const;

    // Same A on every adjacent ordered pair of the grid.
    static IciCoefficients uniform(const CarrierGrid& grid, double A);
};

// Fraction of a flat source spectrum of width W_sb, broadened by the
// Lorentzian of width beta, that falls in the adjacent carrier's signal band
// (spacing offset * W_ch). Adaptive quadrature to 1e-8 absolute.
double ici_coeff_analytic(double beta_hz, const CarrierGrid& grid, int offset = 1);

struct EmpiricalIci {
    double adjacent = 0.0;          // leaked fraction in one adjacent signal band
    double total_out_of_band = 0.0; // fraction outside the source's own signal band
    double bin_width_hz = 0.0;
    std::size_t n_samples = 0;
    std::size_t n_avg = 0;
};

// Time-domain oracle: flat-spectrum source at rate W, multiplied by
// exp(j phi(n)), Hann-windowed averaged periodograms, power integrated over
// the adjacent signal band. n_samples must be a power of two >= 2^14 and
// give a bin width <= W_gb / 4.
EmpiricalIci ici_coeff_empirical(double beta_hz, const CarrierGrid& grid,
                                 std::size_t n_samples, std::size_t n_avg,
                                 std::uint64_t seed);

}  // namespace thz
