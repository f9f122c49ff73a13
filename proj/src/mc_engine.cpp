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

#include "thzlink/mc_engine.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <limits>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace thz {

namespace {

constexpr std::uint64_t kChunkTrials = 4096;
constexpr double kZ95 = 1.959963984540054;
// seed domain separation for the empirical ICI oracle
constexpr std::uint64_t kIciSeedSalt = 0xA5A5A5A5DEADBEEFULL;

double neighbor_power(const SystemConfig& config, const CarrierGrid& grid, int j) {
    if (config.p_adjacent >= 0.0) return config.p_adjacent;
    return config.P[grid.position(j)];
}

}  // namespace

std::size_t resolve_worker_count(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("THZLINK_WORKERS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

ChannelModel ChannelModel::from_config(const SystemConfig& config) {
    config.validate();
    ChannelModel model;
    model.grid = build_grid(config);
    model.geom = derive_beam(config.a, config.w_d, config.sigma_s);
    model.fading = NakagamiParams{config.m, config.Omega};
    model.share_hp = config.share_hp;
    model.share_hf = config.share_hf;
    const auto provider = AbsorptionProvider::from_source(config.kappa_source);
    model.h_l.reserve(model.grid.centers.size());
    for (double f_k : model.grid.centers) {
        model.h_l.push_back(
            deterministic_gain(provider, f_k, config.d, config.G_t, config.G_r).h_l);
    }
    return model;
}

ChannelRealization draw_realization(const ChannelModel& model, RandomStream& rng) {
    const std::size_t K = model.h_l.size();
    ChannelRealization real;
    real.h_l = model.h_l;
    real.h_p.resize(K);
    real.h_f_mag.resize(K);
    real.h2.resize(K);

    const double hp_shared = sample_hp(model.geom, rng);
    double hf_shared = 0.0;
    if (model.share_hf) hf_shared = sample_nakagami(model.fading, rng);

    for (std::size_t i = 0; i < K; ++i) {
        real.h_p[i] = model.share_hp ? hp_shared : sample_hp(model.geom, rng);
        real.h_f_mag[i] = model.share_hf ? hf_shared : sample_nakagami(model.fading, rng);
        const double amp = real.h_l[i] * real.h_p[i] * real.h_f_mag[i];
        real.h2[i] = amp * amp;
    }
    return real;
}

double conditional_ici_variance(const ChannelRealization& real, int k,
                                const IciCoefficients& A, const SystemConfig& config,
                                const CarrierGrid& grid) {
    double sum = 0.0;
    for (int j : {k - 1, k + 1}) {
        if (neighbor_indicator(grid, j) == 0) continue;
        sum += A.A(j, k) * real.h2[grid.position(j)] * neighbor_power(config, grid, j);
    }
    return sum;
}

double instantaneous_sinr(const ChannelRealization& real, int k,
                          const IciCoefficients& A, const SystemConfig& config,
                          const CarrierGrid& grid) {
    const std::size_t pos = grid.position(k);
    const double sigma2 = conditional_ici_variance(real, k, A, config, grid);
    return real.h2[pos] * config.P[pos] / (sigma2 + config.N_o);
}

Engine::Engine(SystemConfig config, RunOptions opts)
    : config_(std::move(config)), opts_(opts) {
    config_.validate();
    model_ = ChannelModel::from_config(config_);
    workers_ = resolve_worker_count(opts_.n_workers);

    if (config_.beta == 0.0) {
        adjacent_A_ = 0.0;
    } else {
        switch (opts_.ici_model) {
            case IciModel::analytic:
                adjacent_A_ = ici_coeff_analytic(config_.beta, model_.grid);
                break;
            case IciModel::empirical: {
                std::size_t n = opts_.ici_n_samples;
                if (n == 0) {
                    const double need = 4.0 * config_.W() / config_.W_gb;
                    n = 1u << 14;
                    while (static_cast<double>(n) < need) n <<= 1;
                }
                adjacent_A_ = ici_coeff_empirical(config_.beta, model_.grid, n,
                                                  opts_.ici_n_avg,
                                                  config_.seed ^ kIciSeedSalt)
                                  .adjacent;
                break;
            }
            case IciModel::fixed:
                adjacent_A_ = opts_.fixed_A;
                break;
        }
    }
    ici_ = IciCoefficients::uniform(model_.grid, adjacent_A_);
}

struct Engine::Sums {
    std::vector<double> rho;       // sum of rho per carrier
    std::vector<double> rho2;      // sum of rho^2
    std::vector<double> db;        // sum of 10 log10 rho
    std::vector<double> db2;
    std::vector<std::uint64_t> below;  // [carrier * G + threshold] counts
    std::uint64_t n = 0;

    Sums(std::size_t K, std::size_t G)
        : rho(K, 0.0), rho2(K, 0.0), db(K, 0.0), db2(K, 0.0), below(K * G, 0) {}

    void add(const Sums& o) {
        for (std::size_t i = 0; i < rho.size(); ++i) {
            rho[i] += o.rho[i];
            rho2[i] += o.rho2[i];
            db[i] += o.db[i];
            db2[i] += o.db2[i];
        }
        for (std::size_t i = 0; i < below.size(); ++i) below[i] += o.below[i];
        n += o.n;
    }
};

// Trials are processed in fixed-size chunks; chunk partial sums are combined
// in chunk order, so the reduction result does not depend on worker count.
Engine::Sums Engine::run_trials(std::uint64_t n_trials,
                                const std::vector<double>& gamma_ths) const {
    const std::size_t K = static_cast<std::size_t>(config_.K);
    const std::size_t G = gamma_ths.size();
    const std::uint64_t n_chunks = (n_trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<Sums> chunk_sums(n_chunks, Sums(K, G));

    std::atomic<std::uint64_t> next_chunk{0};
    const auto worker = [&]() {
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks) return;
            Sums& s = chunk_sums[c];
            const std::uint64_t lo = c * kChunkTrials;
            const std::uint64_t hi = std::min(lo + kChunkTrials, n_trials);
            for (std::uint64_t t = lo; t < hi; ++t) {
                RandomStream rng(config_.seed, t);
                const ChannelRealization real = draw_realization(model_, rng);
                for (std::size_t i = 0; i < K; ++i) {
                    const int k = model_.grid.indices[i];
                    const double rho =
                        instantaneous_sinr(real, k, ici_, config_, model_.grid);
                    s.rho[i] += rho;
                    s.rho2[i] += rho * rho;
                    const double rho_db = 10.0 * std::log10(rho);
                    s.db[i] += rho_db;
                    s.db2[i] += rho_db * rho_db;
                    for (std::size_t g = 0; g < G; ++g) {
                        if (rho < gamma_ths[g]) ++s.below[i * G + g];
                    }
                }
            }
            s.n = hi - lo;
        }
    };

    const std::size_t n_workers = std::min<std::size_t>(workers_, n_chunks);
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    Sums total(K, G);
    for (const auto& s : chunk_sums) total.add(s);
    return total;
}

SinrEstimates Engine::run_average_sinr() const {
    if (config_.n_trials < 1000) {
        throw std::invalid_argument("run_average_sinr: n_trials must be >= 1000");
    }
    const Sums sums = run_trials(config_.n_trials, {});
    const double n = static_cast<double>(sums.n);

    SinrEstimates out;
    const std::size_t K = static_cast<std::size_t>(config_.K);
    out.mean_linear.resize(K);
    out.mean_db.resize(K);
    for (std::size_t i = 0; i < K; ++i) {
        const double mean = sums.rho[i] / n;
        const double var = std::max(0.0, sums.rho2[i] / n - mean * mean);
        out.mean_linear[i] = {mean, sums.n, kZ95 * std::sqrt(var / n), config_.seed};

        const double mean_db = sums.db[i] / n;
        const double var_db = std::max(0.0, sums.db2[i] / n - mean_db * mean_db);
        out.mean_db[i] = {mean_db, sums.n, kZ95 * std::sqrt(var_db / n), config_.seed};
    }
    return out;
}

OutageEstimates Engine::run_outage() const {
    return run_outage(threshold_from_rate(config_.r, config_.threshold_mode));
}

OutageEstimates Engine::run_outage(double gamma_th) const {
    return run_outage_curve({gamma_th}).front();
}

std::vector<OutageEstimates> Engine::run_outage_curve(
    const std::vector<double>& gamma_ths) const {
    if (gamma_ths.empty()) {
        throw std::invalid_argument("run_outage_curve: no thresholds given");
    }
    for (double g : gamma_ths) {
        if (!(g > 0.0)) {
            throw std::invalid_argument("run_outage_curve: gamma_th must be > 0");
        }
    }
    const std::size_t K = static_cast<std::size_t>(config_.K);
    const std::size_t G = gamma_ths.size();

    std::uint64_t n_trials = config_.n_trials;
    Sums sums = run_trials(n_trials, gamma_ths);

    const auto min_op = [&](const Sums& s) {
        double lo = 1.0;
        for (auto b : s.below) {
            lo = std::min(lo, static_cast<double>(b) / static_cast<double>(s.n));
        }
        return lo;
    };

    bool escalated = false;
    if (opts_.auto_escalate && n_trials < opts_.escalate_trials &&
        min_op(sums) < 1e-3) {
        n_trials = opts_.escalate_trials;
        sums = run_trials(n_trials, gamma_ths);
        escalated = true;
    }

    const double n = static_cast<double>(sums.n);
    std::vector<OutageEstimates> out(G);
    for (std::size_t g = 0; g < G; ++g) {
        out[g].gamma_th = gamma_ths[g];
        out[g].escalated = escalated;
        out[g].op.resize(K);
        for (std::size_t i = 0; i < K; ++i) {
            const double fails = static_cast<double>(sums.below[i * G + g]);
            const double p_hat = fails / n;
            double half;
            if (fails < 1000.0) {
                // Wilson interval half-width
                const double z2 = kZ95 * kZ95;
                half = kZ95 *
                       std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) /
                       (1.0 + z2 / n);
            } else {
                half = kZ95 * std::sqrt(p_hat * (1.0 - p_hat) / n);
            }
            out[g].op[i] = {p_hat, sums.n, half, config_.seed};
            if (fails < 100.0) out[g].low_failure_warning = true;
        }
    }
    return out;
}

std::vector<double> semi_analytic_op_no_phn(const SystemConfig& config, double gamma_th) {
    config.validate();
    if (config.beta != 0.0) {
        throw std::invalid_argument("semi_analytic_op_no_phn: requires beta = 0");
    }
    if (!(gamma_th > 0.0)) {
        throw std::invalid_argument("semi_analytic_op_no_phn: gamma_th must be > 0");
    }
    const ChannelModel model = ChannelModel::from_config(config);
    const NakagamiParams& nak = model.fading;
    const BeamGeometry& geom = model.geom;

    std::vector<double> op;
    op.reserve(model.h_l.size());
    for (std::size_t i = 0; i < model.h_l.size(); ++i) {
        const double t =
            std::sqrt(gamma_th * config.N_o / config.P[i]) / model.h_l[i];
        if (config.sigma_s == 0.0) {
            op.push_back(cdf_nakagami(t / geom.A0, nak));
            continue;
        }
        // condition on |h_f| = x: Pr[h_p < t/x] = min(1, (t/(A0 x))^{gamma^2}),
        // split at x0 = t/A0 where the misalignment CDF saturates
        const double x0 = t / geom.A0;
        const double g2 = geom.gamma2();
        const auto integrand = [&](double x) {
            return pdf_nakagami(x, nak) * std::pow(x0 / x, g2);
        };
        boost::math::quadrature::exp_sinh<double> integrator;
        double error = 0.0;
        double l1 = 0.0;
        const double tail = integrator.integrate(
            integrand, x0, std::numeric_limits<double>::infinity(), 1e-9, &error,
            &l1);
        if (!(error < 1e-6 * std::max(1.0, l1))) {
            throw std::runtime_error("semi_analytic_op_no_phn: quadrature did not converge");
        }
        const double val = cdf_nakagami(x0, nak) + tail;
        op.push_back(std::min(1.0, std::max(0.0, val)));
    }
    return op;
}

}  // namespace thz
