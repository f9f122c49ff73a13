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

#include <limits>

#include "thzlink/rng.hpp"

namespace thz {

// Pointing-error geometry: Gaussian beam of footprint radius w_d received by
// a circular aperture of radius a, with Rayleigh(sigma_s) radial offset.
struct BeamGeometry {
    double a = 0.0;         // aperture radius, m
    double w_d = 0.0;       // beam footprint radius at distance d, m
    double sigma_s = 0.0;   // radial jitter std dev, m
    double v = 0.0;         // sqrt(pi) a / (sqrt(2) w_d)
    double A0 = 0.0;        // collected power fraction at zero offset
    double w_eq = 0.0;      // equivalent beamwidth, m
    double gamma_ratio = std::numeric_limits<double>::infinity();  // w_eq / (2 sigma_s)

    double gamma2() const { return gamma_ratio * gamma_ratio; }
};

BeamGeometry derive_beam(double a, double w_d, double sigma_s);

// Density of h_p: gamma^2 / A0^{gamma^2} * x^{gamma^2 - 1} on (0, A0], else 0.
double pdf_hp(double x, const BeamGeometry& geom);

// CDF (x / A0)^{gamma^2}, clamped to [0, 1].
double cdf_hp(double x, const BeamGeometry& geom);

// Mean and second moment of h_p (analytic).
double mean_hp(const BeamGeometry& geom);
double mean_hp2(const BeamGeometry& geom);

// Draws a Rayleigh(sigma_s) radial displacement r_d and returns
// h_p = A0 * exp(-2 r_d^2 / w_eq^2). sigma_s = 0 gives A0 (one uniform is
// still consumed so sweeps over sigma_s stay draw-aligned).
double sample_hp(const BeamGeometry& geom, RandomStream& rng);

}  // namespace thz
