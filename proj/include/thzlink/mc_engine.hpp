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

#include "thzlink/channel.hpp"
#include "thzlink/config.hpp"
#include "thzlink/fading.hpp"
#include "thzlink/misalignment.hpp"
#include "thzlink/phase_noise.hpp"
#include "thzlink/rng.hpp"

namespace thz {

// One Monte Carlo draw, per carrier in grid order.
struct ChannelRealization {
    std::vector<double> h_l;      // deterministic amplitude
    std::vector<double> h_p;      // misalignment draw
    std::vector<double> h_f_mag;  // Nakagami draw
    std::vector<double> h2;       // composite |h_k|^2 = (h_l h_p h_f)^2
};

struct MetricEstimate {
    double value = 0.0;       // mean linear SINR, or probability
    std::uint64_t n = 0;      // trials
    double half_width = 0.0;  // 95% confidence half-width
    std::uint64_t seed = 0;
};

enum class IciModel { analytic, empirical, fixed };

struct RunOptions {
    IciModel ici_model = IciModel::analytic;
    double fixed_A = 0.0;               // used when ici_model == fixed
    std::size_t n_workers = 0;          // 0: THZLINK_WORKERS env, else hw threads
    bool auto_escalate = true;          // outage runs re-run at escalate_trials
    std::uint64_t escalate_trials = 1000000;
    std::size_t ici_n_samples = 0;      // 0: auto (smallest valid power of two)
    std::size_t ici_n_avg = 16;
};

// Immutable per-run context: grid, beam geometry, per-carrier deterministic
// gains, fading parameters. Shareable across threads.
struct ChannelModel {
    CarrierGrid grid;
    BeamGeometry geom;
    NakagamiParams fading;
    std::vector<double> h_l;  // per carrier
    bool share_hp = true;
    bool share_hf = false;

    static ChannelModel from_config(const SystemConfig& config);
};

// One shared h_p draw (configurable), independent per-carrier h_f draws,
// deterministic h_l. Draw order is fixed (h_p uniform first) so parameter
// sweeps with a common seed reuse identical underlying draws.
ChannelRealization draw_realization(const ChannelModel& model, RandomStream& rng);

// sigma_psi^2 = sum over j = k -/+ 1 in grid of A(j,k) |h_j|^2 P_j.
double conditional_ici_variance(const ChannelRealization& real, int k,
                                const IciCoefficients& A, const SystemConfig& config,
                                const CarrierGrid& grid);

// rho = |h_k|^2 P_k / (sigma_psi^2 + N_o).
double instantaneous_sinr(const ChannelRealization& real, int k,
                          const IciCoefficients& A, const SystemConfig& config,
                          const CarrierGrid& grid);

struct SinrEstimates {
    std::vector<MetricEstimate> mean_linear;  // mean of rho
    std::vector<MetricEstimate> mean_db;      // mean of 10 log10(rho), secondary
};

struct OutageEstimates {
    std::vector<MetricEstimate> op;
    double gamma_th = 0.0;
    bool escalated = false;
    bool low_failure_warning = false;  // expected failures < 100 somewhere
};

class Engine {
public:
    explicit Engine(SystemConfig config, RunOptions opts = {});

    const SystemConfig& config() const { return config_; }
    const CarrierGrid& grid() const { return model_.grid; }
    const ChannelModel& model() const { return model_; }
    const IciCoefficients& ici() const { return ici_; }
    double adjacent_A() const { return adjacent_A_; }

    SinrEstimates run_average_sinr() const;
    OutageEstimates run_outage(double gamma_th) const;
    OutageEstimates run_outage() const;  // gamma_th from config rate + mode
    // One pass over the trials, counting against every threshold; the shared
    // sample paths make OP exactly non-decreasing in gamma_th.
    std::vector<OutageEstimates> run_outage_curve(
        const std::vector<double>& gamma_ths) const;

private:
    struct Sums;
    Sums run_trials(std::uint64_t n_trials,
                    const std::vector<double>& gamma_ths) const;

    SystemConfig config_;
    RunOptions opts_;
    ChannelModel model_;
    IciCoefficients ici_;
    double adjacent_A_ = 0.0;
    std::size_t workers_ = 1;
};

// Quadrature oracle for beta = 0: OP = Pr[h_p |h_f| < t] with
// t = sqrt(gamma_th N_o / P_k) / h_l(k), per carrier. Rejects beta != 0.
std::vector<double> semi_analytic_op_no_phn(const SystemConfig& config, double gamma_th);

std::size_t resolve_worker_count(std::size_t requested);

}  // namespace thz
