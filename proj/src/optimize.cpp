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

#include "mmwlink/optimize.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

namespace mmwlink::optimize {

namespace {

std::vector<int> sweep_range(int n_max) {
    std::vector<int> v(n_max);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

channel::LinkBudget with_sizes(const channel::LinkBudget &templ, int nt, int nr) {
    channel::LinkBudget l = templ;
    l.tx_array.n = nt;
    l.rx_array.n = nr;
    return l;
}

} // namespace

OptimizationResult optimize_array_sizes(const channel::LinkBudget &link_template,
                                        int n_max, Method method,
                                        const montecarlo::SimulationSpec *mc_spec,
                                        unsigned threads) {
    if (n_max < 1)
        throw std::invalid_argument("optimize_array_sizes: n_max must be >= 1");
    if (method == Method::kMonteCarlo && mc_spec == nullptr)
        throw std::invalid_argument("optimize_array_sizes: Monte Carlo method needs a "
                                    "SimulationSpec");
    link_template.validate();

    // Ground sides keep the full n_max panel; only aerial sides are swept.
    std::vector<int> nt_values = sweep_range(n_max);
    std::vector<int> nr_values = sweep_range(n_max);
    if (link_template.link_type == channel::LinkType::kG2A)
        nt_values = {n_max};
    if (link_template.link_type == channel::LinkType::kA2G)
        nr_values = {n_max};

    const auto start = std::chrono::steady_clock::now();
    OptimizationResult result;
    result.method = method;
    result.evaluations.reserve(nt_values.size() * nr_values.size());

    if (method == Method::kAnalytical) {
        // Warm the normalization cache once so the sweep stays quadrature-free.
        for (int n : nt_values)
            antenna::normalization_constant(link_template.tx_array.with_n(n));
        for (int n : nr_values)
            antenna::normalization_constant(link_template.rx_array.with_n(n));
        for (int nt : nt_values)
            for (int nr : nr_values)
                result.evaluations.push_back(
                    {nt, nr, channel::outage_probability(with_sizes(link_template, nt, nr))});
    } else {
        const auto grid = montecarlo::estimate_outage_grid(link_template, nt_values,
                                                           nr_values, *mc_spec, threads);
        for (std::size_t i = 0; i < nt_values.size(); ++i)
            for (std::size_t j = 0; j < nr_values.size(); ++j)
                result.evaluations.push_back(
                    {nt_values[i], nr_values[j], grid[i][j].p_hat});
    }

    result.best_outage = 2.0;
    for (const Evaluation &e : result.evaluations) {
        if (e.outage < result.best_outage) {
            result.best_outage = e.outage;
            result.best_nt = e.nt;
            result.best_nr = e.nr;
        }
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace mmwlink::optimize
