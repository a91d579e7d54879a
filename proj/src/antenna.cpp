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

#include "mmwlink/antenna.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mmwlink::antenna {

namespace {

constexpr double kDegPerRad = 180.0 / kPi;

// Squared normalized Dirichlet ratio with the removable singularities at
// psi = 2 pi l evaluated by limit.
double af_ratio_sq(double psi, int n) {
    const double s = std::sin(0.5 * psi);
    if (std::abs(s) < 1e-9)
        return 1.0;
    const double r = std::sin(0.5 * n * psi) / (n * s);
    return r * r;
}

double element_gain_db_impl(double theta_x, double theta_y, const ArrayConfig &cfg) {
    const double sx = std::sin(theta_x);
    const double sy = std::sin(theta_y);
    // vertical cut angle, (0, 180) degrees with boresight at 90
    const double theta_e_deg = std::atan2(std::sqrt(1.0 + sx * sx), sy) * kDegPerRad;
    const double dv = (theta_e_deg - 90.0) / cfg.theta_3db_deg;
    const double dh = theta_x * kDegPerRad / cfg.phi_3db_deg;
    const double att_v = std::min(12.0 * dv * dv, cfg.sidelobe_limit_db);
    const double att_h = std::min(12.0 * dh * dh, cfg.front_back_db);
    return cfg.g_max_dbi - std::min(att_v + att_h, cfg.front_back_db);
}

} // namespace

void ArrayConfig::validate() const {
    if (n < 1)
        throw std::domain_error("ArrayConfig: n must be >= 1");
    if (!(carrier_hz > 0.0))
        throw std::domain_error("ArrayConfig: carrier_hz must be positive");
    if (!(element_spacing_wavelengths > 0.0))
        throw std::domain_error("ArrayConfig: element spacing must be positive");
    if (!(total_power_constant > 0.0))
        throw std::domain_error("ArrayConfig: total_power_constant must be positive");
    if (!(theta_3db_deg > 0.0) || !(phi_3db_deg > 0.0))
        throw std::domain_error("ArrayConfig: 3 dB beamwidths must be positive");
}

PointingAngles pointing_angles(double theta_x, double theta_y) {
    const double sx = std::sin(theta_x);
    const double sy = std::sin(theta_y);
    if (sx == 0.0 && sy == 0.0)
        return {0.0, 0.0};
    return {std::atan(std::hypot(sx, sy)), std::atan2(sy, sx)};
}

double element_gain_db(double theta_x, double theta_y, const ArrayConfig &cfg) {
    return element_gain_db_impl(theta_x, theta_y, cfg);
}

double array_factor(const ArrayConfig &cfg, double theta, double phi) {
    const double st = std::sin(theta);
    const double psi_x = cfg.kd() * st * std::cos(phi) + cfg.beta_x;
    const double psi_y = cfg.kd() * st * std::sin(phi) + cfg.beta_y;
    return af_ratio_sq(psi_x, cfg.n) * af_ratio_sq(psi_y, cfg.n);
}

PointingEval eval_pointing(const ArrayConfig &cfg, double theta_x, double theta_y) {
    const double sx = std::sin(theta_x);
    const double sy = std::sin(theta_y);
    // sin(theta) cos(phi) = sin(theta_x) / sqrt(1 + sin^2 tx + sin^2 ty)
    const double inv = 1.0 / std::sqrt(1.0 + sx * sx + sy * sy);
    PointingEval pe;
    pe.psi_x = cfg.kd() * sx * inv + cfg.beta_x;
    pe.psi_y = cfg.kd() * sy * inv + cfg.beta_y;
    pe.element_gain_linear = std::pow(10.0, element_gain_db_impl(theta_x, theta_y, cfg) * 0.1);
    return pe;
}

double gain_from_pointing(const ArrayConfig &cfg, const PointingEval &pe, double g0) {
    return g0 * af_ratio_sq(pe.psi_x, cfg.n) * af_ratio_sq(pe.psi_y, cfg.n) *
           pe.element_gain_linear;
}

namespace {

// Composite (element x array factor) pattern over the sphere, G_0 = 1. The
// element formulas take sin(theta_x), sin(theta_y) as inputs, which folds the
// back hemisphere onto the front; the full-sphere integral is therefore twice
// the front-hemisphere integral.
double composite_unnorm(const ArrayConfig &cfg, double theta, double phi) {
    const double st = std::sin(theta);
    const double sx = std::clamp(st * std::cos(phi), -1.0, 1.0);
    const double sy = std::clamp(st * std::sin(phi), -1.0, 1.0);
    const double psi_x = cfg.kd() * sx + cfg.beta_x;
    const double psi_y = cfg.kd() * sy + cfg.beta_y;
    const double ge_db =
        element_gain_db_impl(std::asin(sx), std::asin(sy), cfg);
    return af_ratio_sq(psi_x, cfg.n) * af_ratio_sq(psi_y, cfg.n) *
           std::pow(10.0, 0.1 * ge_db);
}

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGlx[4] = {0.18343464249564980494, 0.52553240991632898582,
                            0.79666647741362673959, 0.96028985649753623168};
constexpr double kGlw[4] = {0.36268378337836198297, 0.31370664587788728734,
                            0.22238103445337447054, 0.10122853629037625915};

double tensor_integral(const ArrayConfig &cfg, int panels) {
    // 2 * int_0^{pi/2} dtheta int_0^{2 pi} dphi  G(theta, phi) sin(theta)
    const double h_t = (0.5 * kPi) / panels;
    const double h_p = (2.0 * kPi) / panels;
    std::vector<double> phi_nodes(panels * 8), phi_wts(panels * 8);
    for (int p = 0; p < panels; ++p) {
        const double c = (p + 0.5) * h_p;
        for (int g = 0; g < 4; ++g) {
            phi_nodes[p * 8 + 2 * g] = c - 0.5 * h_p * kGlx[g];
            phi_nodes[p * 8 + 2 * g + 1] = c + 0.5 * h_p * kGlx[g];
            phi_wts[p * 8 + 2 * g] = 0.5 * h_p * kGlw[g];
            phi_wts[p * 8 + 2 * g + 1] = 0.5 * h_p * kGlw[g];
        }
    }
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double c = (p + 0.5) * h_t;
        for (int g = 0; g < 8; ++g) {
            const double theta =
                c + 0.5 * h_t * ((g % 2) ? kGlx[g / 2] : -kGlx[g / 2]);
            const double wt = 0.5 * h_t * kGlw[g / 2];
            const double st = std::sin(theta);
            double row = 0.0;
            for (std::size_t q = 0; q < phi_nodes.size(); ++q)
                row += phi_wts[q] * composite_unnorm(cfg, theta, phi_nodes[q]);
            total += wt * st * row;
        }
    }
    return 2.0 * total;
}

double sphere_integral_refined(const ArrayConfig &cfg, const QuadratureSpec &spec) {
    int panels = std::max(16, 4 * cfg.n);
    if (panels > spec.max_intervals)
        throw accuracy_error("normalization_constant: panel budget below the base "
                             "resolution required for this array size");
    double coarse = tensor_integral(cfg, panels);
    while (true) {
        if (2 * panels > spec.max_intervals)
            throw accuracy_error("normalization_constant: quadrature did not converge "
                                 "within the interval budget");
        panels *= 2;
        const double fine = tensor_integral(cfg, panels);
        const double err = std::abs(fine - coarse);
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(fine)))
            return fine;
        coarse = fine;
    }
}

struct NormKey {
    std::array<double, 11> v;
    bool operator<(const NormKey &o) const { return v < o.v; }
};

NormKey make_key(const ArrayConfig &cfg) {
    return {{static_cast<double>(cfg.n), cfg.carrier_hz, cfg.element_spacing_wavelengths,
             cfg.beta_x, cfg.beta_y, cfg.g_max_dbi, cfg.front_back_db,
             cfg.sidelobe_limit_db, cfg.theta_3db_deg, cfg.phi_3db_deg,
             cfg.total_power_constant}};
}

std::mutex g_norm_mutex;
std::map<NormKey, double> g_norm_cache;

QuadratureSpec default_norm_spec() {
    QuadratureSpec s;
    s.max_intervals = 8192;
    s.abs_tol = 0.0;
    s.rel_tol = 1e-7;
    return s;
}

} // namespace

double normalization_constant(const ArrayConfig &cfg, const QuadratureSpec &spec) {
    cfg.validate();
    spec.validate();
    const NormKey key = make_key(cfg);
    {
        std::lock_guard<std::mutex> lock(g_norm_mutex);
        auto it = g_norm_cache.find(key);
        if (it != g_norm_cache.end())
            return it->second;
    }
    const double value = cfg.total_power_constant / sphere_integral_refined(cfg, spec);
    std::lock_guard<std::mutex> lock(g_norm_mutex);
    return g_norm_cache.emplace(key, value).first->second;
}

double normalization_constant(const ArrayConfig &cfg) {
    return normalization_constant(cfg, default_norm_spec());
}

double sphere_power_integral(const ArrayConfig &cfg, const QuadratureSpec &spec) {
    const double g0 = normalization_constant(cfg);
    return g0 * sphere_integral_refined(cfg, spec);
}

double actual_gain(const ArrayConfig &cfg, double theta_x, double theta_y) {
    return gain_from_pointing(cfg, eval_pointing(cfg, theta_x, theta_y),
                              normalization_constant(cfg));
}

double pattern_power_constant(const ArrayConfig &cfg) {
    return 0.2025 * std::pow(10.0, 0.1 * cfg.g_max_dbi) * normalization_constant(cfg);
}

double approx_gain(const ArrayConfig &cfg, double theta_x, double theta_y) {
    const double gpp = pattern_power_constant(cfg);
    const double kd = cfg.kd();
    const double r2 = theta_x * theta_x + theta_y * theta_y;
    const double x = cfg.n * kd * std::sqrt(r2);
    if (x < 1e-8)
        return gpp * kd * kd * 0.5; // Taylor limit of (1 - cos x)/x^2
    const double s = std::sin(0.5 * x);
    return gpp * 2.0 * s * s / (cfg.n * cfg.n * r2);
}

double peak_gain(const ArrayConfig &cfg) {
    return actual_gain(cfg, 0.0, 0.0);
}

double SectorizedPattern::gain_at(double radial_rad) const {
    const double r = std::abs(radial_rad);
    for (const Level &lv : levels)
        if (r <= lv.upper_angle_rad)
            return lv.gain_linear;
    return 0.0;
}

void SectorizedPattern::validate() const {
    if (levels.size() != static_cast<std::size_t>(lobes) * d_param)
        throw std::domain_error("SectorizedPattern: sector count must equal j*D");
    double prev = 0.0;
    for (const Level &lv : levels) {
        if (!(lv.upper_angle_rad > prev))
            throw std::domain_error("SectorizedPattern: bounds must increase strictly");
        if (lv.gain_linear < 0.0)
            throw std::domain_error("SectorizedPattern: gains must be non-negative");
        prev = lv.upper_angle_rad;
    }
}

SectorizedPattern sectorize(const ArrayConfig &cfg, int d_param, int lobes,
                            Sector0Rule rule) {
    cfg.validate();
    if (d_param < 2)
        throw std::domain_error("sectorize: d_param must be >= 2");
    if (lobes != 1 && lobes != 2)
        throw std::domain_error("sectorize: lobes must be 1 or 2");

    const double gpp = pattern_power_constant(cfg);
    const double kd = cfg.kd();
    const double d = static_cast<double>(d_param);
    SectorizedPattern pat;
    pat.n = cfg.n;
    pat.d_param = d_param;
    pat.lobes = lobes;
    pat.norm_constant = gpp;
    pat.levels.resize(static_cast<std::size_t>(lobes) * d_param);
    const double sector0 = (rule == Sector0Rule::kPaper ? 2.0 : 0.5) * kd * kd * gpp;
    pat.levels[0] = {1.0 / (d * cfg.n), sector0};
    for (int i = 1; i < lobes * d_param; ++i) {
        const double gain = gpp * d * d * (1.0 - std::cos(i * kd / d)) / (double(i) * i);
        pat.levels[i] = {(i + 1.0) / (d * cfg.n), gain};
    }
    pat.validate();
    return pat;
}

} // namespace mmwlink::antenna
