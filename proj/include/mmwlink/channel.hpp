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

#include <cmath>
#include <vector>

#include "mmwlink/antenna.hpp"

namespace mmwlink::channel {

/// Gaussian orientation-jitter parameters of one terminal. sigma_rad = 0
/// denotes a perfectly stable ground node.
struct OrientationStats {
    double offset_x_rad = 0.0;
    double offset_y_rad = 0.0;
    double sigma_rad = 0.0;

    double offset_radial() const { return std::hypot(offset_x_rad, offset_y_rad); }
    bool stable() const { return sigma_rad == 0.0; }
    void validate() const;
};

enum class LinkType { kA2A, kG2A, kA2G };

struct Sectorization {
    int d_param = 25;
    int lobes = 2;
    antenna::Sector0Rule sector0 = antenna::Sector0Rule::kContinuity;
};

/// One end-to-end link. Powers are stored in dBm as configured; the linear
/// accessors below are what the models consume.
struct LinkBudget {
    LinkType link_type = LinkType::kA2A;
    double distance_m = 1000.0;
    double tx_power_dbm = 20.0;
    double noise_power_dbm = -110.0;
    double nakagami_m = 3.0;
    double snr_threshold_db = 10.0;
    double building_height_m = 30.0;
    antenna::ArrayConfig tx_array;
    antenna::ArrayConfig rx_array;
    OrientationStats tx_orientation;
    OrientationStats rx_orientation;
    Sectorization sectorization;

    double tx_power_mw() const { return std::pow(10.0, 0.1 * tx_power_dbm); }
    double noise_power_mw() const { return std::pow(10.0, 0.1 * noise_power_dbm); }
    double snr_threshold_linear() const { return std::pow(10.0, 0.1 * snr_threshold_db); }
    double path_loss_linear() const;

    /// Deterministic SNR factor P_t h_L / sigma^2 multiplying fading and gains.
    double snr_scale() const { return tx_power_mw() * path_loss_linear() / noise_power_mw(); }

    void validate() const;
};

/// Large-scale loss in dB (negative). f_c enters in GHz. The log10(d) slope
/// carries the sign of the underlying 3GPP formula.
double path_loss_db(double distance_m, double carrier_hz, double building_height_m);

/// Sector occupancy probabilities J_d, d = 0 .. j*D-1, from the Marcum
/// Q-function of the Rician radial deviation. Requires sigma > 0.
std::vector<double> sector_weights(const OrientationStats &orient, int n, int d_param,
                                   int lobes);

/// Finite mixture of scaled Gamma components: each component contributes
/// weight * Gamma(shape = m, mean = scale) to the SNR density. Mass not
/// captured by the modeled lobes is kept in residual_mass.
struct SnrMixtureModel {
    struct Component {
        double weight;
        double scale; // mean SNR of this component, linear
    };
    double shape_m = 1.0;
    std::vector<Component> components;
    double residual_mass = 0.0;
};

enum class ResidualPolicy { kToOutage, kIgnore };

SnrMixtureModel build_a2a_mixture(const LinkBudget &link);
SnrMixtureModel build_g2a_mixture(const LinkBudget &link); // G2A and A2G (swapped)
SnrMixtureModel build_mixture(const LinkBudget &link);     // dispatch on link_type

double mixture_pdf(const SnrMixtureModel &model, double snr_linear);
double mixture_cdf(const SnrMixtureModel &model, double snr_linear,
                   ResidualPolicy policy = ResidualPolicy::kToOutage);

/// P_out = F(gamma_th) with truncated mass counted as outage.
double outage_probability(const LinkBudget &link);

} // namespace mmwlink::channel
