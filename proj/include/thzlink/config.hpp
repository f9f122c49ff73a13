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
#include <string>
#include <vector>

namespace thz {

enum class ThresholdMode { paper, shannon };

// Absorption-coefficient source: either a constant kappa (1/m) or a
// two-column CSV table of (frequency_hz, kappa_per_m).
struct KappaSource {
    bool is_table = false;
    double constant = 0.0;        // 1/m, used when !is_table
    std::string table_path;       // CSV path, used when is_table
};

// Full experiment parameterization. All powers and gains are linear here;
// dB conversion happens at config-parse time. Powers are normalized to the
// noise power N_o.
struct SystemConfig {
    int K = 10;                   // carrier count, even, >= 2
    double W_sb = 2.0e9;          // per-carrier signal bandwidth, Hz
    double W_gb = 0.5e6;          // per-carrier guard bandwidth, Hz
    double f_c = 335.0e9;         // central frequency, Hz
    double d = 10.0;              // transmission distance, m
    double G_t = 0.0;             // transmit power gain, linear
    double G_r = 0.0;             // receive power gain, linear
    std::vector<double> P;        // per-carrier transmit power, linear over N_o; K entries
    double p_adjacent = -1.0;     // neighbor-power override, linear; < 0 means "use P"
    double N_o = 1.0;             // noise power, linear (normalization reference)
    double m = 4.0;               // Nakagami shape, >= 0.5
    double Omega = 1.0;           // Nakagami spread E[|h_f|^2]
    double sigma_s = 0.0;         // pointing jitter std dev, m
    double a = 0.05;              // receive-aperture effective radius, m
    double w_d = 0.05;            // beam footprint radius at distance d, m
    double beta = 0.0;            // LO 3-dB bandwidth, Hz
    double r = 1.0;               // spectral efficiency, bits/s/Hz
    std::uint64_t n_trials = 100000;
    std::uint64_t seed = 1;
    KappaSource kappa_source;
    bool share_hp = true;         // one misalignment draw per trial, shared by all carriers
    bool share_hf = false;        // per-carrier (false) or shared (true) fading draws
    ThresholdMode threshold_mode = ThresholdMode::paper;

    double W_ch() const { return W_sb + W_gb; }
    double W() const { return static_cast<double>(K) * W_ch(); }

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// The K carrier center frequencies and signal-band edges, indexed by the
// symmetric index set {-K/2,...,-1,1,...,K/2} (no index 0).
struct CarrierGrid {
    std::vector<int> indices;     // ascending, index 0 absent
    std::vector<double> centers;  // Hz, strictly increasing
    std::vector<double> band_lo;  // Hz
    std::vector<double> band_hi;  // Hz
    double W_sb = 0.0;
    double W_gb = 0.0;

    int K() const { return static_cast<int>(indices.size()); }
    double W_ch() const { return W_sb + W_gb; }

    bool contains(int j) const {
        const int half = K() / 2;
        return j != 0 && j >= -half && j <= half;
    }

    // Position of carrier index j in the arrays; throws if j not in grid.
    std::size_t position(int j) const;
};

// Centers are f_k = f_c + sign(k) * (|k| - 1/2) * W_ch: the K carriers
// straddle f_c symmetrically with no carrier at f_c itself.
CarrierGrid build_grid(const SystemConfig& config);

// 1 iff j is a valid carrier index of the grid, 0 otherwise.
int neighbor_indicator(const CarrierGrid& grid, int j);

// paper: gamma_th = 2^(r-1) as printed; shannon: 2^r - 1.
double threshold_from_rate(double r, ThresholdMode mode = ThresholdMode::paper);

}  // namespace thz
