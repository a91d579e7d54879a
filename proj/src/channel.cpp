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

#include "mmwlink/channel.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mmwlink/specfun.hpp"

namespace mmwlink::channel {

void OrientationStats::validate() const {
    if (sigma_rad < 0.0)
        throw std::domain_error("OrientationStats: sigma must be non-negative");
    if (!std::isfinite(offset_x_rad) || !std::isfinite(offset_y_rad))
        throw std::domain_error("OrientationStats: offsets must be finite");
}

double LinkBudget::path_loss_linear() const {
    return std::pow(10.0, 0.1 * path_loss_db(distance_m, tx_array.carrier_hz,
                                             building_height_m));
}

void LinkBudget::validate() const {
    tx_array.validate();
    rx_array.validate();
    tx_orientation.validate();
    rx_orientation.validate();
    if (!(distance_m > 0.0))
        throw std::domain_error("LinkBudget: distance must be positive");
    if (!(building_height_m > 0.0))
        throw std::domain_error("LinkBudget: building height must be positive");
    if (nakagami_m < 0.5)
        throw std::domain_error("LinkBudget: Nakagami m must be >= 0.5");
    if (sectorization.d_param < 2)
        throw std::domain_error("LinkBudget: d_param must be >= 2");
    if (sectorization.lobes != 1 && sectorization.lobes != 2)
        throw std::domain_error("LinkBudget: lobes must be 1 or 2");

    auto ground = [](const OrientationStats &o) {
        return o.sigma_rad == 0.0 && o.offset_x_rad == 0.0 && o.offset_y_rad == 0.0;
    };
    if (link_type == LinkType::kG2A && !ground(tx_orientation))
        throw std::domain_error("LinkBudget: G2A requires a stable ground transmitter "
                                "(zero offsets and sigma)");
    if (link_type == LinkType::kA2G && !ground(rx_orientation))
        throw std::domain_error("LinkBudget: A2G requires a stable ground receiver "
                                "(zero offsets and sigma)");
    if (link_type == LinkType::kA2A &&
        (tx_orientation.sigma_rad <= 0.0 || rx_orientation.sigma_rad <= 0.0))
        throw std::domain_error("LinkBudget: A2A requires jitter on both terminals");

    if (distance_m > 3000.0)
        std::fprintf(stderr,
                     "mmwlink: warning: distance %.0f m is outside the envelope the "
                     "path-loss model was reported for\n",
                     distance_m);
}

double path_loss_db(double distance_m, double carrier_hz, double building_height_m) {
    if (!(distance_m > 0.0))
        throw std::domain_error("path_loss_db: distance must be positive");
    if (!(carrier_hz > 0.0))
        throw std::domain_error("path_loss_db: carrier must be positive");
    if (!(building_height_m > 0.0))
        throw std::domain_error("path_loss_db: building height must be positive");
    const double fc_ghz = carrier_hz / 1e9;
    const double hb173 = std::pow(building_height_m, 1.73);
    return -20.0 * std::log10(40.0 * antenna::kPi * distance_m * fc_ghz / 3.0) -
           std::min(0.03 * hb173, 10.0) * std::log10(distance_m) +
           std::min(0.044 * hb173, 14.77) -
           0.002 * std::log10(building_height_m) * distance_m;
}

std::vector<double> sector_weights(const OrientationStats &orient, int n, int d_param,
                                   int lobes) {
    orient.validate();
    if (orient.sigma_rad == 0.0)
        throw std::domain_error("sector_weights: sigma must be positive; stable ground "
                                "terminals use the deterministic peak-gain path");
    if (n < 1 || d_param < 2 || (lobes != 1 && lobes != 2))
        throw std::domain_error("sector_weights: invalid sectorization parameters");

    const double a = orient.offset_radial() / orient.sigma_rad;
    const double steps = static_cast<double>(d_param) * n * orient.sigma_rad;
    const int count = lobes * d_param;
    std::vector<double> w(count);
    double upper = specfun::marcum_q1(a, 0.0);
    for (int d = 0; d < count; ++d) {
        const double next = specfun::marcum_q1(a, (d + 1.0) / steps);
        w[d] = upper - next;
        upper = next;
    }
    return w;
}

namespace {

// Per-sector gain levels of one terminal, in mixture component order.
std::vector<double> sector_gain_levels(const antenna::ArrayConfig &cfg,
                                       const Sectorization &sec) {
    const antenna::SectorizedPattern pat =
        antenna::sectorize(cfg, sec.d_param, sec.lobes, sec.sector0);
    std::vector<double> g(pat.levels.size());
    for (std::size_t i = 0; i < pat.levels.size(); ++i)
        g[i] = pat.levels[i].gain_linear;
    return g;
}

LinkBudget swapped(const LinkBudget &link) {
    LinkBudget s = link;
    s.link_type = LinkType::kG2A;
    s.tx_array = link.rx_array;
    s.rx_array = link.tx_array;
    s.tx_orientation = link.rx_orientation;
    s.rx_orientation = link.tx_orientation;
    return s;
}

} // namespace

SnrMixtureModel build_a2a_mixture(const LinkBudget &link) {
    link.validate();
    if (link.link_type != LinkType::kA2A)
        throw std::invalid_argument("build_a2a_mixture: link is not A2A");

    const Sectorization &sec = link.sectorization;
    const std::vector<double> wt =
        sector_weights(link.tx_orientation, link.tx_array.n, sec.d_param, sec.lobes);
    const std::vector<double> wr =
        sector_weights(link.rx_orientation, link.rx_array.n, sec.d_param, sec.lobes);
    const std::vector<double> gt = sector_gain_levels(link.tx_array, sec);
    const std::vector<double> gr = sector_gain_levels(link.rx_array, sec);

    const double c0 = link.snr_scale();
    SnrMixtureModel model;
    model.shape_m = link.nakagami_m;
    model.components.reserve(wt.size() * wr.size());
    double mass = 0.0;
    for (std::size_t dt = 0; dt < wt.size(); ++dt) {
        for (std::size_t dr = 0; dr < wr.size(); ++dr) {
            const double w = wt[dt] * wr[dr];
            model.components.push_back({w, c0 * gt[dt] * gr[dr]});
            mass += w;
        }
    }
    model.residual_mass = std::max(0.0, 1.0 - mass);
    return model;
}

SnrMixtureModel build_g2a_mixture(const LinkBudget &link) {
    link.validate();
    if (link.link_type == LinkType::kA2G)
        return build_g2a_mixture(swapped(link));
    if (link.link_type != LinkType::kG2A)
        throw std::invalid_argument("build_g2a_mixture: link is not G2A/A2G");

    const Sectorization &sec = link.sectorization;
    const std::vector<double> wr =
        sector_weights(link.rx_orientation, link.rx_array.n, sec.d_param, sec.lobes);
    const std::vector<double> gr = sector_gain_levels(link.rx_array, sec);
    // The aligned ground antenna is taken at its maximum gain.
    const double gt_max = antenna::peak_gain(link.tx_array);

    const double c0 = link.snr_scale() * gt_max;
    SnrMixtureModel model;
    model.shape_m = link.nakagami_m;
    model.components.reserve(wr.size());
    double mass = 0.0;
    for (std::size_t dr = 0; dr < wr.size(); ++dr) {
        model.components.push_back({wr[dr], c0 * gr[dr]});
        mass += wr[dr];
    }
    model.residual_mass = std::max(0.0, 1.0 - mass);
    return model;
}

SnrMixtureModel build_mixture(const LinkBudget &link) {
    return link.link_type == LinkType::kA2A ? build_a2a_mixture(link)
                                            : build_g2a_mixture(link);
}

double mixture_pdf(const SnrMixtureModel &model, double snr_linear) {
    if (!(snr_linear > 0.0))
        throw std::domain_error("mixture_pdf: snr must be positive");
    const double m = model.shape_m;
    const double lg = specfun::ln_gamma(m);
    double pdf = 0.0;
    for (const auto &c : model.components) {
        if (c.weight == 0.0)
            continue;
        const double rate = m / c.scale;
        const double lp = m * std::log(rate) + (m - 1.0) * std::log(snr_linear) -
                          rate * snr_linear - lg;
        pdf += c.weight * std::exp(lp);
    }
    return pdf;
}

double mixture_cdf(const SnrMixtureModel &model, double snr_linear,
                   ResidualPolicy policy) {
    if (snr_linear < 0.0)
        throw std::domain_error("mixture_cdf: snr must be non-negative");
    double cdf = (policy == ResidualPolicy::kToOutage) ? model.residual_mass : 0.0;
    if (snr_linear == 0.0)
        return cdf;
    const double m = model.shape_m;
    for (const auto &c : model.components) {
        if (c.weight == 0.0)
            continue;
        cdf += c.weight * specfun::regularized_lower_gamma(m, m * snr_linear / c.scale);
    }
    return std::min(cdf, 1.0);
}

double outage_probability(const LinkBudget &link) {
    const SnrMixtureModel model = build_mixture(link);
    return mixture_cdf(model, link.snr_threshold_linear(), ResidualPolicy::kToOutage);
}

} // namespace mmwlink::channel
