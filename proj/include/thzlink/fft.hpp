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

#include <complex>
#include <vector>

namespace thz {

// In-place radix-2 DIT transform; size must be a power of two.
// inverse=true applies the 1/N scaling.
void fft(std::vector<std::complex<double>>& x, bool inverse = false);

bool is_power_of_two(std::size_t n);

}  // namespace thz
