// SPDX-License-Identifier: Apache-2.0
//
// mmwlink — link budget and channel statistics for UAV-mounted mmWave square-array links
// Copyright (C) 2026 the mmwlink authors
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

#include "mmwlink/montecarlo.hpp"

namespace mmwlink::optimize {

enum class Method { kAnalytical, kMonteCarlo };

struct Evaluation {
    int nt;
    int nr;
    double outage;
};

struct OptimizationResult {
    int best_nt = 0;
    int best_nr = 0;
    double best_outage = 1.0;
    std::vector<Evaluation> evaluations;
    Method method = Method::kAnalytical;
    double elapsed_seconds = 0.0;
};

/// Exhaustive sweep over active array sizes minimizing outage. For A2A both
/// sides range over 1..n_max; for G2A/A2G the ground side is pinned at n_max
/// and only the aerial side is swept. Ties break toward the smallest nt, then
/// the smallest nr. The Monte Carlo method reuses one draw stream across the
/// whole grid, so every cell matches an estimate_outage call with spec's seed.
OptimizationResult optimize_array_sizes(const channel::LinkBudget &link_template,
                                        int n_max, Method method,
                                        const montecarlo::SimulationSpec *mc_spec = nullptr,
                                        unsigned threads = 1);

} // namespace mmwlink::optimize
