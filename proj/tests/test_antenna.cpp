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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mmwlink/antenna.hpp"

using namespace mmwlink;
using namespace mmwlink::antenna;

namespace {

ArrayConfig make_config(int n) {
    ArrayConfig cfg;
    cfg.n = n;
    return cfg;
}

} // namespace

TEST_CASE("pointing_angles basics") {
    const auto origin = pointing_angles(0.0, 0.0);
    CHECK(origin.theta == 0.0);
    CHECK(origin.phi == 0.0);

    const double a = 0.2;
    const auto on_axis = pointing_angles(a, 0.0);
    CHECK(on_axis.theta == Catch::Approx(std::atan(std::sin(a))).epsilon(1e-15));
    CHECK(on_axis.phi == 0.0);

    // frozen from a scripted evaluation of the transform
    const auto diag = pointing_angles(0.05, 0.05);
    CHECK(diag.theta == Catch::Approx(0.070563866686064611).epsilon(1e-14));
    CHECK(diag.phi == Catch::Approx(0.78539816339744828).epsilon(1e-14));

    // negative quadrants resolve through atan2
    CHECK(pointing_angles(-0.05, 0.05).phi ==
          Catch::Approx(3.0 * 0.78539816339744828).epsilon(1e-13));
}

TEST_CASE("element gain peaks at boresight and floors at the front-back ratio") {
    const ArrayConfig cfg = make_config(8);
    CHECK(element_gain_db(0.0, 0.0, cfg) == Catch::Approx(8.0).margin(1e-12));
    // frozen from the reference script with the adopted sign convention
    CHECK(element_gain_db(0.2, 0.1, cfg) ==
          Catch::Approx(7.5382089214678052).epsilon(1e-13));
    for (double tx : {-1.4, -0.9, 0.9, 1.4}) {
        for (double ty : {-1.4, 0.0, 1.4}) {
            const double g = element_gain_db(tx, ty, cfg);
            CAPTURE(tx, ty);
            CHECK(g >= cfg.g_max_dbi - cfg.front_back_db - 1e-12);
            CHECK(g <= cfg.g_max_dbi + 1e-12);
        }
    }
}

TEST_CASE("array factor limits and nulls") {
    const ArrayConfig cfg8 = make_config(8);
    CHECK(array_factor(cfg8, 0.0, 0.0) == Catch::Approx(1.0).margin(1e-12));
    CHECK(array_factor(cfg8, 0.0, 1.23) == Catch::Approx(1.0).margin(1e-12));

    const ArrayConfig cfg1 = make_config(1);
    for (double theta : {0.0, 0.4, 1.0, 1.5})
        for (double phi : {0.0, 1.0, 3.0, 5.5})
            CHECK(array_factor(cfg1, theta, phi) == Catch::Approx(1.0).margin(1e-12));

    // first null where N psi_x / 2 = pi and psi_y = 0
    const double theta_null = std::asin(2.0 * kPi / (8.0 * cfg8.kd()));
    CHECK(array_factor(cfg8, theta_null, 0.0) < 1e-20);
}

TEST_CASE("normalization constants match the reference evaluation") {
    // frozen from an independent tensor-quadrature script (G0' = 4 pi)
    struct Golden {
        int n;
        double g0;
    };
    const Golden goldens[] = {{1, 0.492487112218}, {2, 1.3672802024},
                              {4, 4.67245343125},  {8, 17.2359486847},
                              {16, 66.2563382835}, {18, 83.4905932577}};
    for (const auto &g : goldens) {
        CAPTURE(g.n);
        CHECK(normalization_constant(make_config(g.n)) ==
              Catch::Approx(g.g0).epsilon(1e-6));
    }
}

TEST_CASE("normalized pattern conserves total radiated power") {
    QuadratureSpec tight;
    tight.max_intervals = 8192;
    tight.rel_tol = 1e-9;
    for (int n : {1, 2, 4, 8, 16}) {
        const ArrayConfig cfg = make_config(n);
        const double total = sphere_power_integral(cfg, tight);
        CAPTURE(n);
        CHECK(total == Catch::Approx(cfg.total_power_constant).epsilon(1e-4));
    }
}

TEST_CASE("normalization rejects an impossible interval budget") {
    QuadratureSpec tiny;
    tiny.max_intervals = 16;
    tiny.rel_tol = 1e-14;
    CHECK_THROWS_AS(normalization_constant(make_config(12), tiny), accuracy_error);
}

TEST_CASE("peak gain grows strictly with N") {
    // golden for the ground-station panel
    CHECK(peak_gain(make_config(18)) == Catch::Approx(526.79003011).epsilon(1e-6));
    double prev = 0.0;
    for (int n = 1; n <= 20; ++n) {
        const double pk = peak_gain(make_config(n));
        CAPTURE(n);
        CHECK(pk > prev);
        prev = pk;
    }
}

TEST_CASE("gain symmetry under x-y exchange") {
    const ArrayConfig cfg = make_config(8);

    // the array factor swaps its two Dirichlet terms exactly
    for (double theta : {0.05, 0.2, 0.8})
        for (double phi : {0.1, 0.7, 1.2}) {
            CAPTURE(theta, phi);
            CHECK(array_factor(cfg, theta, phi) ==
                  Catch::Approx(array_factor(cfg, theta, 0.5 * kPi - phi))
                      .epsilon(1e-13));
        }

    // the radial approximation is exactly symmetric
    CHECK(approx_gain(cfg, 0.03, 0.07) == approx_gain(cfg, 0.07, 0.03));

    // the element pattern couples both axes through its vertical cut, so the
    // composite is symmetric only up to that residual over the jitter region
    for (double a : {0.01, 0.04, 0.1, 0.15})
        for (double b : {0.0, 0.02, 0.09, 0.13}) {
            CAPTURE(a, b);
            CHECK(actual_gain(cfg, a, b) ==
                  Catch::Approx(actual_gain(cfg, b, a)).epsilon(3e-3));
        }
}

TEST_CASE("actual gain is bounded by the boresight peak") {
    const ArrayConfig cfg = make_config(8);
    const double peak = peak_gain(cfg);
    for (double a : {0.01, 0.04, 0.1, 0.3})
        for (double b : {0.0, 0.02, 0.09, 0.52}) {
            CAPTURE(a, b);
            CHECK(actual_gain(cfg, a, b) <= peak * (1.0 + 1e-12));
            CHECK(actual_gain(cfg, a, b) >= 0.0);
        }
    CHECK(actual_gain(cfg, 30.0 * kPi / 180.0, 0.0) < peak);
}

TEST_CASE("gain_from_pointing reproduces actual_gain exactly") {
    const ArrayConfig cfg = make_config(11);
    const double g0 = normalization_constant(cfg);
    for (double a : {0.003, 0.02, 0.15})
        for (double b : {-0.07, 0.0, 0.11}) {
            const PointingEval pe = eval_pointing(cfg, a, b);
            CHECK(gain_from_pointing(cfg, pe, g0) == actual_gain(cfg, a, b));
        }
}

TEST_CASE("approx gain limits and golden value") {
    const ArrayConfig cfg = make_config(8);
    const double gpp = pattern_power_constant(cfg);
    const double kd = cfg.kd();

    // r -> 0 Taylor limit
    CHECK(approx_gain(cfg, 0.0, 0.0) == Catch::Approx(gpp * kd * kd * 0.5).epsilon(1e-12));
    CHECK(approx_gain(cfg, 1e-12, 0.0) ==
          Catch::Approx(gpp * kd * kd * 0.5).epsilon(1e-9));

    // first null of the approximation
    const double r_null = 2.0 * kPi / (cfg.n * kd);
    CHECK(approx_gain(cfg, r_null, 0.0) < 1e-25 * gpp);

    // frozen from the reference script (N=8)
    CHECK(approx_gain(cfg, 0.03, 0.04) == Catch::Approx(95.1059315042).epsilon(1e-5));
    CHECK(approx_gain(cfg, 0.03, 0.04) / actual_gain(cfg, 0.03, 0.04) ==
          Catch::Approx(1.00137).epsilon(1e-3));
}

TEST_CASE("approx gain tracks the actual pattern over the inner main lobe") {
    for (int n : {4, 8, 16}) {
        const ArrayConfig cfg = make_config(n);
        const double r_max = 0.5 / n;
        for (double frac : {0.15, 0.4, 0.7, 1.0}) {
            for (double phi : {0.0, 0.5, 1.0, 1.4}) {
                const double r = frac * r_max;
                const double tx = r * std::cos(phi);
                const double ty = r * std::sin(phi);
                const double act = actual_gain(cfg, tx, ty);
                const double app = approx_gain(cfg, tx, ty);
                CAPTURE(n, r, phi);
                CHECK(std::abs(app - act) / act < 0.10);
            }
        }
    }
}

TEST_CASE("sectorized pattern covers j*D rings with the paper's level values") {
    const ArrayConfig cfg = make_config(8);
    const SectorizedPattern p1 = sectorize(cfg, 6, 1);
    CHECK(p1.levels.size() == 6);
    CHECK(p1.levels.back().upper_angle_rad == Catch::Approx(1.0 / 8.0).epsilon(1e-12));

    const SectorizedPattern p2 = sectorize(cfg, 10, 2);
    CHECK(p2.levels.size() == 20);
    CHECK(p2.levels.back().upper_angle_rad == Catch::Approx(2.0 / 8.0).epsilon(1e-12));

    // ring values for i >= 1 equal the smooth approximation at r = i/(D N)
    const SectorizedPattern p3 = sectorize(cfg, 25, 2);
    for (std::size_t i = 1; i < p3.levels.size(); ++i) {
        const double r = static_cast<double>(i) / (25.0 * cfg.n);
        CAPTURE(i);
        CHECK(p3.levels[i].gain_linear ==
              Catch::Approx(approx_gain(cfg, r, 0.0)).epsilon(1e-12));
    }
}

TEST_CASE("sector zero rule selects the innermost level value") {
    const ArrayConfig cfg = make_config(8);
    const double gpp = pattern_power_constant(cfg);
    const double kd2 = cfg.kd() * cfg.kd();
    const SectorizedPattern paper = sectorize(cfg, 25, 2, Sector0Rule::kPaper);
    const SectorizedPattern cont = sectorize(cfg, 25, 2, Sector0Rule::kContinuity);
    CHECK(paper.levels[0].gain_linear == Catch::Approx(2.0 * kd2 * gpp).epsilon(1e-12));
    CHECK(cont.levels[0].gain_linear == Catch::Approx(0.5 * kd2 * gpp).epsilon(1e-12));
    CHECK(paper.levels[1].gain_linear == cont.levels[1].gain_linear);
    // continuity value equals the boresight gain of the composite pattern
    CHECK(cont.levels[0].gain_linear == Catch::Approx(peak_gain(cfg)).epsilon(2e-3));
}

TEST_CASE("sectorized staircase never increases") {
    for (int n : {1, 4, 8, 13, 20}) {
        const ArrayConfig cfg = make_config(n);
        for (int d : {2, 6, 15, 25, 30}) {
            for (int j : {1, 2}) {
                for (auto rule : {Sector0Rule::kContinuity, Sector0Rule::kPaper}) {
                    const SectorizedPattern pat = sectorize(cfg, d, j, rule);
                    for (std::size_t i = 1; i < pat.levels.size(); ++i) {
                        CAPTURE(n, d, j, i);
                        REQUIRE(pat.levels[i].gain_linear <=
                                pat.levels[i - 1].gain_linear * (1.0 + 1e-12));
                    }
                }
            }
        }
    }
}

TEST_CASE("sectorized lookup is zero beyond the last ring") {
    const ArrayConfig cfg = make_config(8);
    const SectorizedPattern pat = sectorize(cfg, 25, 2);
    CHECK(pat.gain_at(0.0) == pat.levels[0].gain_linear);
    CHECK(pat.gain_at(0.249) > 0.0);
    CHECK(pat.gain_at(0.2501) == 0.0);
    CHECK(pat.gain_at(1.0) == 0.0);
}

TEST_CASE("sectorize validates its parameters") {
    const ArrayConfig cfg = make_config(8);
    CHECK_THROWS_AS(sectorize(cfg, 1, 1), std::domain_error);
    CHECK_THROWS_AS(sectorize(cfg, 25, 3), std::domain_error);
}

TEST_CASE("array config validation") {
    ArrayConfig bad = make_config(0);
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = make_config(4);
    bad.carrier_hz = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = make_config(4);
    bad.element_spacing_wavelengths = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}
