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

#include "mmwlink/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace mmwlink::montecarlo {

void SimulationSpec::validate() const {
    if (num_samples < 1)
        throw std::domain_error("SimulationSpec: num_samples must be positive");
    if (batch_size < 1)
        throw std::domain_error("SimulationSpec: batch_size must be positive");
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

SubstreamRng::SubstreamRng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed ^ (0xA0761D6478BD642Full * (stream + 1));
    s_[0] = splitmix64(x);
    s_[1] = splitmix64(x);
    s_[2] = splitmix64(x);
    s_[3] = splitmix64(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0)
        s_[0] = 0x9E3779B97F4A7C15ull;
}

std::uint64_t SubstreamRng::next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double SubstreamRng::uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double SubstreamRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

double SubstreamRng::gamma(double shape) {
    if (!(shape > 0.0))
        throw std::domain_error("SubstreamRng::gamma: shape must be positive");
    if (shape < 1.0) {
        // boost: Gamma(a) = Gamma(a+1) * U^(1/a)
        const double g = gamma(shape + 1.0);
        return g * std::pow(uniform01(), 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2)
            return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

namespace {

// Per-sample state shared by all estimators. Draw order per sample is fixed:
// jitter normals for the Tx end (if any), jitter normals for the Rx end
// (if any), then the fading variate.
struct EndModel {
    bool jitter = false;
    antenna::ArrayConfig cfg;
    channel::OrientationStats orient;
    double g0 = 0.0;        // normalization of cfg (jitter end)
    double fixed_gain = 0.0; // boresight gain (ground end)
};

struct LinkSampler {
    EndModel tx, rx;
    double base_scale; // P_t h_L / sigma^2
    double shape_m;

    explicit LinkSampler(const channel::LinkBudget &link) {
        link.validate();
        base_scale = link.snr_scale();
        shape_m = link.nakagami_m;
        tx.cfg = link.tx_array;
        rx.cfg = link.rx_array;
        tx.orient = link.tx_orientation;
        rx.orient = link.rx_orientation;
        tx.jitter = link.link_type != channel::LinkType::kG2A;
        rx.jitter = link.link_type != channel::LinkType::kA2G;
        for (EndModel *e : {&tx, &rx}) {
            if (e->jitter)
                e->g0 = antenna::normalization_constant(e->cfg);
            else
                e->fixed_gain = antenna::peak_gain(e->cfg);
        }
    }

    double end_gain(const EndModel &e, SubstreamRng &rng) const {
        if (!e.jitter)
            return e.fixed_gain;
        const double ax = e.orient.offset_x_rad + e.orient.sigma_rad * rng.normal();
        const double ay = e.orient.offset_y_rad + e.orient.sigma_rad * rng.normal();
        return antenna::gain_from_pointing(e.cfg, antenna::eval_pointing(e.cfg, ax, ay),
                                           e.g0);
    }

    double sample_snr(SubstreamRng &rng) const {
        const double gt = end_gain(tx, rng);
        const double gr = end_gain(rx, rng);
        const double zeta = rng.gamma_unit_mean(shape_m);
        return ((base_scale * zeta) * gt) * gr;
    }
};

// Evaluates one jittering end against several candidate array sizes using the
// same deviation draw, staying on the gain_from_pointing code path.
struct EndGrid {
    EndModel end;
    std::vector<antenna::ArrayConfig> cfgs;
    std::vector<double> g0s;        // per candidate (jitter end)
    std::vector<double> fixed;      // per candidate (ground end)

    EndGrid(const EndModel &e, const std::vector<int> &candidates) : end(e) {
        for (int n : candidates) {
            antenna::ArrayConfig c = e.cfg.with_n(n);
            cfgs.push_back(c);
            if (e.jitter) {
                g0s.push_back(antenna::normalization_constant(c));
                fixed.push_back(0.0);
            } else {
                g0s.push_back(0.0);
                fixed.push_back(antenna::peak_gain(c));
            }
        }
    }

    void gains(SubstreamRng &rng, std::vector<double> &out) const {
        if (!end.jitter) {
            out = fixed;
            return;
        }
        const double ax = end.orient.offset_x_rad + end.orient.sigma_rad * rng.normal();
        const double ay = end.orient.offset_y_rad + end.orient.sigma_rad * rng.normal();
        for (std::size_t i = 0; i < cfgs.size(); ++i) {
            const antenna::PointingEval pe = antenna::eval_pointing(cfgs[i], ax, ay);
            out[i] = antenna::gain_from_pointing(cfgs[i], pe, g0s[i]);
        }
    }
};

struct BatchPlan {
    std::uint64_t batches;
    std::uint32_t batch_size;
    std::uint64_t total;

    std::uint64_t size_of(std::uint64_t b) const {
        const std::uint64_t first = b * batch_size;
        return std::min<std::uint64_t>(batch_size, total - first);
    }
};

BatchPlan make_plan(const SimulationSpec &spec) {
    spec.validate();
    BatchPlan p;
    p.total = spec.num_samples;
    p.batch_size = spec.batch_size;
    p.batches = (spec.num_samples + spec.batch_size - 1) / spec.batch_size;
    return p;
}

void run_batches(std::uint64_t batches, unsigned threads,
                 const std::function<void(std::uint64_t)> &work) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || batches <= 1) {
        for (std::uint64_t b = 0; b < batches; ++b)
            work(b);
        return;
    }
    std::atomic<std::uint64_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            const std::uint64_t b = cursor.fetch_add(1);
            if (b >= batches)
                return;
            work(b);
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, batches));
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i)
        pool.emplace_back(worker);
    for (auto &t : pool)
        t.join();
}

OutageEstimate finish_estimate(std::uint64_t hits, std::uint64_t n) {
    OutageEstimate est;
    est.n = n;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(n);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n));
    est.low_confidence = static_cast<double>(hits) < 20.0;
    return est;
}

} // namespace

std::vector<double> sample_link_snr(const channel::LinkBudget &link,
                                    const SimulationSpec &spec, unsigned threads) {
    const BatchPlan plan = make_plan(spec);
    const LinkSampler sampler(link);
    std::vector<double> samples(plan.total);
    run_batches(plan.batches, threads, [&](std::uint64_t b) {
        SubstreamRng rng(spec.seed, b);
        const std::uint64_t first = b * plan.batch_size;
        const std::uint64_t count = plan.size_of(b);
        for (std::uint64_t i = 0; i < count; ++i)
            samples[first + i] = sampler.sample_snr(rng);
    });
    return samples;
}

OutageEstimate estimate_outage(const channel::LinkBudget &link, const SimulationSpec &spec,
                               unsigned threads) {
    if (spec.num_samples < 10000)
        throw std::domain_error("estimate_outage: reported estimates need >= 1e4 samples");
    const BatchPlan plan = make_plan(spec);
    const LinkSampler sampler(link);
    const double gamma_th = link.snr_threshold_linear();
    std::vector<std::uint64_t> hits(plan.batches, 0);
    run_batches(plan.batches, threads, [&](std::uint64_t b) {
        SubstreamRng rng(spec.seed, b);
        const std::uint64_t count = plan.size_of(b);
        std::uint64_t h = 0;
        for (std::uint64_t i = 0; i < count; ++i)
            h += sampler.sample_snr(rng) < gamma_th;
        hits[b] = h;
    });
    std::uint64_t total_hits = 0;
    for (std::uint64_t h : hits)
        total_hits += h;
    return finish_estimate(total_hits, plan.total);
}

std::vector<std::vector<OutageEstimate>>
estimate_outage_grid(const channel::LinkBudget &link, const std::vector<int> &nt_candidates,
                     const std::vector<int> &nr_candidates, const SimulationSpec &spec,
                     unsigned threads) {
    if (spec.num_samples < 10000)
        throw std::domain_error("estimate_outage_grid: reported estimates need >= 1e4 samples");
    if (nt_candidates.empty() || nr_candidates.empty())
        throw std::invalid_argument("estimate_outage_grid: empty candidate list");
    const BatchPlan plan = make_plan(spec);
    const LinkSampler sampler(link);
    const EndGrid tx_grid(sampler.tx, nt_candidates);
    const EndGrid rx_grid(sampler.rx, nr_candidates);
    const double gamma_th = link.snr_threshold_linear();
    const std::size_t nt = nt_candidates.size();
    const std::size_t nr = nr_candidates.size();

    std::vector<std::vector<std::uint64_t>> hits(plan.batches,
                                                 std::vector<std::uint64_t>(nt * nr, 0));
    run_batches(plan.batches, threads, [&](std::uint64_t b) {
        SubstreamRng rng(spec.seed, b);
        const std::uint64_t count = plan.size_of(b);
        std::vector<double> gt(nt), gr(nr);
        std::vector<std::uint64_t> &h = hits[b];
        for (std::uint64_t s = 0; s < count; ++s) {
            tx_grid.gains(rng, gt);
            rx_grid.gains(rng, gr);
            const double zeta = rng.gamma_unit_mean(sampler.shape_m);
            const double base = sampler.base_scale * zeta;
            for (std::size_t i = 0; i < nt; ++i) {
                const double bt = base * gt[i];
                for (std::size_t j = 0; j < nr; ++j)
                    h[i * nr + j] += (bt * gr[j]) < gamma_th;
            }
        }
    });

    std::vector<std::vector<OutageEstimate>> result(nt, std::vector<OutageEstimate>(nr));
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t j = 0; j < nr; ++j) {
            std::uint64_t total_hits = 0;
            for (std::uint64_t b = 0; b < plan.batches; ++b)
                total_hits += hits[b][i * nr + j];
            result[i][j] = finish_estimate(total_hits, plan.total);
        }
    }
    return result;
}

std::vector<std::uint64_t> count_below(const channel::LinkBudget &link,
                                       const SimulationSpec &spec,
                                       std::span<const double> grid, unsigned threads) {
    if (grid.empty())
        throw std::invalid_argument("count_below: empty probe grid");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("count_below: probe grid must be sorted ascending");
    const BatchPlan plan = make_plan(spec);
    const LinkSampler sampler(link);
    std::vector<std::vector<std::uint64_t>> buckets(
        plan.batches, std::vector<std::uint64_t>(grid.size() + 1, 0));
    run_batches(plan.batches, threads, [&](std::uint64_t b) {
        SubstreamRng rng(spec.seed, b);
        const std::uint64_t count = plan.size_of(b);
        std::vector<std::uint64_t> &local = buckets[b];
        for (std::uint64_t i = 0; i < count; ++i) {
            const double snr = sampler.sample_snr(rng);
            const std::size_t idx =
                std::lower_bound(grid.begin(), grid.end(), snr) - grid.begin();
            ++local[idx];
        }
    });
    std::vector<std::uint64_t> counts(grid.size(), 0);
    std::uint64_t running = 0;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        for (std::uint64_t b = 0; b < plan.batches; ++b)
            running += buckets[b][g];
        counts[g] = running;
    }
    return counts;
}

std::vector<double> empirical_cdf(std::span<const double> samples,
                                  std::span<const double> grid) {
    if (samples.empty())
        throw std::invalid_argument("empirical_cdf: empty sample stream");
    if (grid.empty())
        throw std::invalid_argument("empirical_cdf: empty probe grid");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("empirical_cdf: grid must be sorted ascending");
    std::vector<std::uint64_t> bucket(grid.size() + 1, 0);
    for (double s : samples) {
        const std::size_t idx =
            std::lower_bound(grid.begin(), grid.end(), s) - grid.begin();
        ++bucket[idx];
    }
    std::vector<double> cdf(grid.size());
    std::uint64_t running = 0;
    const double inv = 1.0 / static_cast<double>(samples.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        running += bucket[i];
        cdf[i] = static_cast<double>(running) * inv;
    }
    return cdf;
}

} // namespace mmwlink::montecarlo
