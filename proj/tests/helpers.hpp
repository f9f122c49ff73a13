#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "thzlink/config.hpp"

namespace testutil {

// sup |ECDF - CDF|
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double c = cdf(samples[i]);
        d = std::max(d, std::abs(c - static_cast<double>(i) / n));
        d = std::max(d, std::abs(c - static_cast<double>(i + 1) / n));
    }
    return d;
}

inline thz::SystemConfig paper_config() {
    thz::SystemConfig cfg;
    cfg.K = 10;
    cfg.W_sb = 2e9;
    cfg.W_gb = 0.5e6;
    cfg.f_c = 335e9;
    cfg.d = 10.0;
    cfg.G_t = std::pow(10.0, 5.5);
    cfg.G_r = std::pow(10.0, 5.5);
    cfg.P.assign(10, 10.0);          // 10 dB over noise
    cfg.p_adjacent = std::pow(10.0, 0.5);  // 5 dB
    cfg.N_o = 1.0;
    cfg.m = 4.0;
    cfg.Omega = 1.0;
    cfg.sigma_s = 0.01;
    cfg.a = 0.05;
    cfg.w_d = 0.05;
    cfg.beta = 1.5e9;
    cfg.r = 3.0;
    cfg.n_trials = 100000;
    cfg.seed = 42;
    cfg.kappa_source.constant = 0.005;
    return cfg;
}

}  // namespace testutil
