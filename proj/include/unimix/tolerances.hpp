// Copyright 2026 The unimix developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>

namespace unimix::tol {

// Default numerical tolerances. Dimensions stay small (d <= 8), so
// conditioning is benign and tight defaults catch convention bugs early.
inline constexpr double hermitian = 1e-10;       // entrywise |M - M^dag|
inline constexpr double psd = 1e-10;             // eigenvalue floor
inline constexpr double unitary = 1e-12;         // |U^dag U - I|
inline constexpr double validity = 1e-9;         // channel verdict tolerance
inline constexpr double ds_gate = 1e-8;          // decomposer input gate
inline constexpr double design = 1e-10;          // design verification pass
inline constexpr double prune_null = 1e-10;      // SVD null-space tolerance
inline constexpr double ensemble_weight = 1e-12; // probability bookkeeping
inline constexpr double dykstra = 1e-12;         // projection stopping rule
inline constexpr int dykstra_max_sweeps = 10000;
inline constexpr std::size_t closure_cap = 100000;

} // namespace unimix::tol
