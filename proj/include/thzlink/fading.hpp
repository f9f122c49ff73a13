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

#include "thzlink/rng.hpp"

namespace thz {

struct NakagamiParams {
    double m = 1.0;      // shape, >= 0.5
    double Omega = 1.0;  // spread E[|h_f|^2]

    void validate() const;
};

// |h_f| = sqrt(G), G ~ Gamma(m, Omega/m); E[|h_f|^2] = Omega.
double sample_nakagami(const NakagamiParams& params, RandomStream& rng);

// 2 m^m x^{2m-1} exp(-m x^2 / Omega) / (Gamma(m) Omega^m) for x >= 0.
double pdf_nakagami(double x, const NakagamiParams& params);

// Amplitude CDF via the regularized incomplete gamma: P(m, m x^2 / Omega).
double cdf_nakagami(double x, const NakagamiParams& params);

// E[|h_f|] = Gamma(m + 1/2) / Gamma(m) * sqrt(Omega / m).
double mean_nakagami(const NakagamiParams& params);

}  // namespace thz
