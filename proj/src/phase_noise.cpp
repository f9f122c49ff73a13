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

#include "thzlink/phase_noise.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "thzlink/fft.hpp"

namespace thz {

PhaseNoiseParams PhaseNoiseParams::make(double beta, double W) {
    if (beta < 0.0) {
        throw std::invalid_argument("PhaseNoiseParams: beta must be >= 0");
    }
    if (!(W > 0.0)) {
        throw std::invalid_argument("PhaseNoiseParams: W must be > 0");
    }
    PhaseNoiseParams p;
    p.beta = beta;
    p.W = W;
    p.sigma_eps2 = 4.0 * M_PI * beta / W;
    return p;
}

std::vector<double> wiener_trace(std::size_t n, const PhaseNoiseParams& params,
                                 RandomStream& rng) {
    if (n < 1) {
        throw std::invalid_argument("wiener_trace: n must be >= 1");
    }
    std::vector<double> phi(n);
    phi[0] = 0.0;
    const double sigma = std::sqrt(params.sigma_eps2);
    for (std::size_t i = 1; i < n; ++i) {
        phi[i] = phi[i - 1] + sigma * rng.normal();
    }
    return phi;
}

double lorentzian_psd(double f_hz, double beta_hz) {
    if (!(beta_hz > 0.0)) {
        throw std::invalid_argument("lorentzian_psd: beta must be > 0");
    }
    return (beta_hz / M_PI) / (beta_hz * beta_hz + f_hz * f_hz);
}

double IciCoefficients::A(int source, int victim) const {
    for (const auto& e : entries) {
        if (e.source == source && e.victim == victim) return e.A;
    }
    return 0.0;
}

IciCoefficients IciCoefficients::uniform(const CarrierGrid& grid, double A) {
    if (A < 0.0 || A > 1.0) {
        throw std::invalid_argument("IciCoefficients: A must be in [0, 1]");
    }
    IciCoefficients c;
    for (int k : grid.indices) {
        for (int j : {k - 1, k + 1}) {
            if (grid.contains(j)) {
                c.entries.push_back({j, k, A});
            }
        }
    }
    return c;
}

double ici_coeff_analytic(double beta_hz, const CarrierGrid& grid, int offset) {
    if (beta_hz < 0.0) {
        throw std::invalid_argument("ici_coeff_analytic: beta must be >= 0");
    }
    if (offset < 1) {
        throw std::invalid_argument("ici_coeff_analytic: offset must be >= 1");
    }
    if (beta_hz == 0.0) return 0.0;
    const double w_sb = grid.W_sb;
    const double delta = static_cast<double>(offset) * grid.W_ch();
    // Flat source of width W_sb convolved with the unit Lorentzian.
    const auto broadened = [&](double f) {
        return (std::atan((f + w_sb / 2.0) / beta_hz) -
                std::atan((f - w_sb / 2.0) / beta_hz)) /
               (M_PI * w_sb);
    };
    double error = 0.0;
    const double a = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        broadened, delta - w_sb / 2.0, delta + w_sb / 2.0, 12, 1e-10, &error);
    if (!(error < 1e-8)) {
        throw std::runtime_error("ici_coeff_analytic: quadrature did not converge");
    }
    return std::min(std::max(a, 0.0), 1.0);
}

EmpiricalIci ici_coeff_empirical(double beta_hz, const CarrierGrid& grid,
                                 std::size_t n_samples, std::size_t n_avg,
                                 std::uint64_t seed) {
    if (!is_power_of_two(n_samples) || n_samples < (1u << 14)) {
        throw std::invalid_argument(
            "ici_coeff_empirical: n_samples must be a power of two >= 2^14");
    }
    if (n_avg < 1) {
        throw std::invalid_argument("ici_coeff_empirical: n_avg must be >= 1");
    }
    const double W = static_cast<double>(grid.K()) * grid.W_ch();
    const double bin = W / static_cast<double>(n_samples);
    if (bin > grid.W_gb / 4.0) {
        throw std::invalid_argument(
            "ici_coeff_empirical: insufficient samples, bin width exceeds W_gb / 4");
    }
    const double w_sb = grid.W_sb;
    const double delta = grid.W_ch();
    const auto params = PhaseNoiseParams::make(beta_hz, W);

    const std::size_t n = n_samples;
    std::vector<double> hann(n);
    for (std::size_t i = 0; i < n; ++i) {
        hann[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) /
                                       static_cast<double>(n));
    }
    // frequency of bin b under the usual DFT wrap
    const auto bin_freq = [&](std::size_t b) {
        return b < n / 2 ? bin * static_cast<double>(b)
                         : bin * (static_cast<double>(b) - static_cast<double>(n));
    };

    std::vector<double> psd(n, 0.0);
    std::vector<std::complex<double>> buf(n);
    for (std::size_t realization = 0; realization < n_avg; ++realization) {
        RandomStream rng(seed, realization);
        // flat spectrum over |f| <= W_sb/2, zero elsewhere
        for (std::size_t b = 0; b < n; ++b) {
            if (std::abs(bin_freq(b)) <= w_sb / 2.0) {
                buf[b] = std::complex<double>(rng.normal(), rng.normal());
            } else {
                buf[b] = 0.0;
            }
        }
        fft(buf, /*inverse=*/true);
        const auto phi = wiener_trace(n, params, rng);
        for (std::size_t i = 0; i < n; ++i) {
            buf[i] *= std::polar(hann[i], phi[i]);
        }
        fft(buf);
        for (std::size_t b = 0; b < n; ++b) {
            psd[b] += std::norm(buf[b]);
        }
    }

    double total = 0.0;
    double own = 0.0;
    double upper = 0.0;
    double lower = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
        const double f = bin_freq(b);
        const double p = psd[b];
        total += p;
        if (std::abs(f) <= w_sb / 2.0) own += p;
        if (f >= delta - w_sb / 2.0 && f <= delta + w_sb / 2.0) upper += p;
        if (f <= -delta + w_sb / 2.0 && f >= -delta - w_sb / 2.0) lower += p;
    }

    EmpiricalIci out;
    out.adjacent = 0.5 * (upper + lower) / total;
    out.total_out_of_band = (total - own) / total;
    out.bin_width_hz = bin;
    out.n_samples = n_samples;
    out.n_avg = n_avg;
    return out;
}

}  // namespace thz
