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

#include "thzlink/misalignment.hpp"

#include <cmath>
#include <stdexcept>

namespace thz {

BeamGeometry derive_beam(double a, double w_d, double sigma_s) {
    if (!(a > 0.0) || !(w_d > 0.0)) {
        throw std::invalid_argument("derive_beam: a and w_d must be > 0");
    }
    if (sigma_s < 0.0) {
        throw std::invalid_argument("derive_beam: sigma_s must be >= 0");
    }
    BeamGeometry g;
    g.a = a;
    g.w_d = w_d;
    g.sigma_s = sigma_s;
    g.v = std::sqrt(M_PI) * a / (std::sqrt(2.0) * w_d);
    const double erf_v = std::erf(g.v);
    g.A0 = erf_v * erf_v;
    g.w_eq = std::sqrt(w_d * w_d * std::sqrt(M_PI) * erf_v /
                       (2.0 * g.v * std::exp(-g.v * g.v)));
    g.gamma_ratio = sigma_s > 0.0 ? g.w_eq / (2.0 * sigma_s)
                                  : std::numeric_limits<double>::infinity();
    return g;
}

double pdf_hp(double x, const BeamGeometry& geom) {
    if (x < 0.0) {
        throw std::invalid_argument("pdf_hp: x must be >= 0");
    }
    if (!(geom.sigma_s > 0.0)) {
        throw std::invalid_argument("pdf_hp: requires sigma_s > 0");
    }
    if (x == 0.0 || x > geom.A0) return 0.0;
    const double g2 = geom.gamma2();
    return g2 / std::pow(geom.A0, g2) * std::pow(x, g2 - 1.0);
}

double cdf_hp(double x, const BeamGeometry& geom) {
    if (x <= 0.0) return 0.0;
    if (x >= geom.A0) return 1.0;
    return std::pow(x / geom.A0, geom.gamma2());
}

double mean_hp(const BeamGeometry& geom) {
    const double g2 = geom.gamma2();
    return g2 * geom.A0 / (g2 + 1.0);
}

double mean_hp2(const BeamGeometry& geom) {
    const double g2 = geom.gamma2();
    return g2 * geom.A0 * geom.A0 / (g2 + 2.0);
}

double sample_hp(const BeamGeometry& geom, RandomStream& rng) {
    const double u = rng.uniform();
    if (geom.sigma_s == 0.0) return geom.A0;
    const double r2 = -2.0 * geom.sigma_s * geom.sigma_s * std::log(u);
    return geom.A0 * std::exp(-2.0 * r2 / (geom.w_eq * geom.w_eq));
}

}  // namespace thz
