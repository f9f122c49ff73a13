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

#include "thzlink/fading.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace thz {

void NakagamiParams::validate() const {
    if (!(m >= 0.5)) {
        throw std::invalid_argument("NakagamiParams: m must be >= 0.5");
    }
    if (!(Omega > 0.0)) {
        throw std::invalid_argument("NakagamiParams: Omega must be > 0");
    }
}

double sample_nakagami(const NakagamiParams& params, RandomStream& rng) {
    params.validate();
    return std::sqrt(sample_gamma(params.m, params.Omega / params.m, rng));
}

double pdf_nakagami(double x, const NakagamiParams& params) {
    params.validate();
    if (x < 0.0) {
        throw std::invalid_argument("pdf_nakagami: x must be >= 0");
    }
    if (x == 0.0) return params.m > 0.5 ? 0.0 : std::numeric_limits<double>::infinity();
    const double m = params.m;
    const double om = params.Omega;
    const double log_pdf = std::log(2.0) + m * std::log(m) + (2.0 * m - 1.0) * std::log(x) -
                           m * x * x / om - std::lgamma(m) - m * std::log(om);
    return std::exp(log_pdf);
}

double cdf_nakagami(double x, const NakagamiParams& params) {
    params.validate();
    if (x <= 0.0) return 0.0;
    return boost::math::gamma_p(params.m, params.m * x * x / params.Omega);
}

double mean_nakagami(const NakagamiParams& params) {
    params.validate();
    return std::exp(std::lgamma(params.m + 0.5) - std::lgamma(params.m)) *
           std::sqrt(params.Omega / params.m);
}

}  // namespace thz
