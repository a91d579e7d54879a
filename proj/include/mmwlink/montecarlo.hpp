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

#include <cstdint>
#include <span>
#include <vector>

#include "mmwlink/channel.hpp"

namespace mmwlink::montecarlo {

/// Run size and reproducibility parameters. Samples are generated in batches;
/// each batch owns an RNG substream derived from (seed, batch index), so
/// results do not depend on thread count or batch execution order.
struct SimulationSpec {
    std::uint64_t num_samples = 5'000'000;
    std::uint64_t seed = 1;
    std::uint32_t batch_size = 65536;

    void validate() const;
};

/// xoshiro256++ seeded through splitmix64 from (seed, stream). Provides the
/// variates the channel sampler needs; draw order is part of the contract.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();
    double uniform01(); // open interval (0, 1)
    double normal();    // standard normal (Box-Muller, cached spare)
    double gamma(double shape);
    double gamma_unit_mean(double shape) { return gamma(shape) / shape; }

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct OutageEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t n = 0;
    bool low_confidence = false; // fewer than 20 expected events resolved
};

/// Draws num_samples end-to-end SNR values (linear) for the link. Identical
/// (link, spec) produce an identical stream regardless of threads.
std::vector<double> sample_link_snr(const channel::LinkBudget &link,
                                    const SimulationSpec &spec, unsigned threads = 1);

/// Fraction of samples below the link's SNR threshold plus binomial standard
/// error. Requires num_samples >= 1e4.
OutageEstimate estimate_outage(const channel::LinkBudget &link, const SimulationSpec &spec,
                               unsigned threads = 1);

/// Outage estimates for every (tx n, rx n) candidate pair, computed from one
/// pass over shared draws. Entry [i][j] is bit-identical to estimate_outage on
/// the link with tx_array.n = nt[i], rx_array.n = nr[j] and the same spec,
/// because the per-sample draws do not depend on the array size.
std::vector<std::vector<OutageEstimate>>
estimate_outage_grid(const channel::LinkBudget &link, const std::vector<int> &nt_candidates,
                     const std::vector<int> &nr_candidates, const SimulationSpec &spec,
                     unsigned threads = 1);

/// Counts of samples <= g for each probe g, from one streaming pass.
std::vector<std::uint64_t> count_below(const channel::LinkBudget &link,
                                       const SimulationSpec &spec,
                                       std::span<const double> grid, unsigned threads = 1);

/// One-pass counting CDF of a materialized sample set at sorted grid points.
std::vector<double> empirical_cdf(std::span<const double> samples,
                                  std::span<const double> grid);

} // namespace mmwlink::montecarlo
