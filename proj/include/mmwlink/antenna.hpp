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

#include <vector>

#include "mmwlink/quadrature.hpp"

namespace mmwlink::antenna {

inline constexpr double kSpeedOfLight = 3e8;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Geometry and gain limits of one N x N uniform square array.
struct ArrayConfig {
    int n = 8;                                 // elements per side
    double carrier_hz = 50e9;                  // f_c
    double element_spacing_wavelengths = 0.5;  // d_a / lambda
    double beta_x = 0.0;                       // progressive phase, radians
    double beta_y = 0.0;
    double g_max_dbi = 8.0;                    // element peak gain
    double front_back_db = 30.0;               // F_m
    double sidelobe_limit_db = 30.0;           // G_SL
    double theta_3db_deg = 65.0;
    double phi_3db_deg = 65.0;
    double total_power_constant = 4.0 * kPi;   // G0'

    double wavelength() const { return kSpeedOfLight / carrier_hz; }
    double wave_number() const { return 2.0 * kPi / wavelength(); }
    double spacing_m() const { return element_spacing_wavelengths * wavelength(); }
    /// k * d_a, the phase advance per element at 90 degrees off boresight.
    double kd() const { return 2.0 * kPi * element_spacing_wavelengths; }

    void validate() const;
    ArrayConfig with_n(int new_n) const {
        ArrayConfig c = *this;
        c.n = new_n;
        return c;
    }
};

struct PointingAngles {
    double theta; // polar angle from boresight axis, [0, pi/2)
    double phi;   // azimuth, quadrant-correct; defined as 0 at boresight
};

/// Spherical pointing direction for per-axis deviations (theta_x, theta_y).
PointingAngles pointing_angles(double theta_x, double theta_y);

/// Single-element gain in dB (3GPP parametric pattern, clamped parabolas).
double element_gain_db(double theta_x, double theta_y, const ArrayConfig &cfg);

/// Squared Dirichlet-kernel product of the square array, normalized so the
/// value is 1 where both phase terms vanish (G_0 = 1). theta in [0, pi],
/// phi in [0, 2 pi).
double array_factor(const ArrayConfig &cfg, double theta, double phi);

/// Power normalization G_0(N) from the full-sphere integral of the composite
/// pattern. max_intervals bounds the panel count per dimension. Results are
/// cached per configuration; the cache is safe for concurrent use.
double normalization_constant(const ArrayConfig &cfg, const QuadratureSpec &spec);
double normalization_constant(const ArrayConfig &cfg); // default accuracy budget

/// Full-sphere integral of the normalized pattern; equals the total power
/// constant up to quadrature error. Exposed for conservation checks.
double sphere_power_integral(const ArrayConfig &cfg, const QuadratureSpec &spec);

/// Pointing-dependent factors of the composite gain that do not depend on N.
/// Lets samplers evaluate one deviation against several array sizes while
/// staying on the exact code path of actual_gain.
struct PointingEval {
    double element_gain_linear;
    double psi_x;
    double psi_y;
};
PointingEval eval_pointing(const ArrayConfig &cfg, double theta_x, double theta_y);
double gain_from_pointing(const ArrayConfig &cfg, const PointingEval &pe, double g0);

/// Composite gain G = G_0 * G_a * G_e in linear units.
double actual_gain(const ArrayConfig &cfg, double theta_x, double theta_y);

/// Smooth main-lobe approximation G0''(N) (1 - cos(N k d_a r)) / (N r)^2.
double approx_gain(const ArrayConfig &cfg, double theta_x, double theta_y);

/// Composite boresight gain (ground-terminal gain in G2A/A2G links).
double peak_gain(const ArrayConfig &cfg);

/// G0''(N) = 0.2025 * 10^(G_max/10) * G_0(N), the scale of the approximate
/// and sectorized patterns.
double pattern_power_constant(const ArrayConfig &cfg);

/// Value assigned to the innermost sector. kPaper follows the closed-form
/// channel model literally (2 k^2 d_a^2 G0''); kContinuity uses the r -> 0
/// limit of the smooth approximation (k^2 d_a^2 G0'' / 2), which also equals
/// the composite boresight gain.
enum class Sector0Rule { kContinuity, kPaper };

/// Piecewise-constant ring approximation of the pattern: j*D sectors over
/// radial deviation, zero beyond the last ring.
struct SectorizedPattern {
    struct Level {
        double upper_angle_rad;
        double gain_linear;
    };
    int n = 0;
    int d_param = 0;
    int lobes = 1;
    double norm_constant = 0.0; // G0''(N)
    std::vector<Level> levels;

    double gain_at(double radial_rad) const;
    void validate() const;
};

SectorizedPattern sectorize(const ArrayConfig &cfg, int d_param, int lobes,
                            Sector0Rule rule = Sector0Rule::kContinuity);

} // namespace mmwlink::antenna
