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
#include <limits>
#include <string>
#include <vector>

#include "mmwlink/montecarlo.hpp"

namespace mmwlink::cli {

/// Full run configuration in the units the paper presents: degrees, dBm, GHz,
/// meters. Parsed from a sectioned key/value file; flags override afterwards.
/// Unknown sections or keys are rejected.
struct RunConfig {
    // [link]
    std::string link_type = "a2a";
    double distance_m = 1000.0;
    double tx_power_dbm = 20.0;
    double noise_power_dbm = -110.0;
    double nakagami_m = 3.0;
    double snr_threshold_db = 10.0;
    double capacity_bps_hz = 0.0; // when > 0, overrides snr_threshold_db via 2^C - 1
    double building_height_m = 30.0;
    double carrier_ghz = 50.0;

    struct ArraySection {
        int n = 8;
        double spacing_wavelengths = 0.5;
        double g_max_dbi = 8.0;
        double front_back_db = 30.0;
        double sidelobe_limit_db = 30.0;
        double theta_3db_deg = 65.0;
        double phi_3db_deg = 65.0;
        double beta_x_rad = 0.0;
        double beta_y_rad = 0.0;
    };
    ArraySection tx_array;
    ArraySection rx_array;

    struct OrientationSection {
        double offset_x_deg = 0.5;
        double offset_y_deg = 0.5;
        double sigma_deg = 1.0;
    };
    OrientationSection tx_orientation;
    OrientationSection rx_orientation;

    // [sectorization]
    int d_param = 25;
    int lobes = 2;
    std::string sector0 = "continuity"; // continuity | paper

    // [simulation]
    std::uint64_t samples = 5'000'000;
    std::uint64_t seed = 1;
    std::uint32_t batch_size = 65536;

    // [pattern]
    double theta_x_min_deg = -15.0;
    double theta_x_max_deg = 15.0;
    double theta_x_step_deg = 0.05;
    std::vector<double> cut_theta_y_deg = {0.0, 2.0, 4.0};

    // [distribution]; NaN bounds auto-span the mixture support
    double snr_min_db = std::numeric_limits<double>::quiet_NaN();
    double snr_max_db = std::numeric_limits<double>::quiet_NaN();
    double snr_step_db = 0.25;

    // [outage]
    std::string sweep = "tx_power_dbm"; // tx_power_dbm | distance_m | n | sigma_deg
    double sweep_from = 0.0;
    double sweep_to = 40.0;
    double sweep_step = 1.0;

    // [validate]
    int probe_points = 60;
    double min_cdf = 1e-3;
    double cdf_tolerance = 0.15;
    double outage_tolerance_se = 3.0;
    std::uint64_t sample_export_cap = 0; // when > 0, dump that many SNR samples

    // [optimize]
    int n_max = 18;
    std::string method = "analytical"; // analytical | monte_carlo

    // [output]
    std::string out_path;

    static RunConfig from_file(const std::string &path);
    static RunConfig from_text(const std::string &text);

    /// Canonical dump: every key in a fixed order, one "section.key = value"
    /// line each. Configs round-trip exactly through this form.
    std::string canonical_text() const;
    std::string digest_hex() const; // FNV-1a 64 of canonical_text()

    channel::LinkBudget to_link_budget() const;
    montecarlo::SimulationSpec to_simulation_spec() const;
};

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

std::uint64_t fnv1a64(const std::string &text);

} // namespace mmwlink::cli
