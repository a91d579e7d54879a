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
#include <random>

#include "mmwlink/quadrature.hpp"
#include "mmwlink/specfun.hpp"
#include "oracles.hpp"

using namespace mmwlink;
using specfun::bessel_i0;
using specfun::bessel_i0_scaled;
using specfun::ln_gamma;
using specfun::marcum_q1;
using specfun::regularized_lower_gamma;

TEST_CASE("quadrature integrates smooth references") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    CHECK(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, spec) ==
          Catch::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                             3.14159265358979323846, spec) ==
          Catch::Approx(2.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::exp(-x * x); }, -8.0, 8.0, spec) ==
          Catch::Approx(std::sqrt(3.14159265358979323846)).epsilon(1e-12));
}

TEST_CASE("quadrature spec validation and budget exhaustion") {
    QuadratureSpec bad;
    bad.abs_tol = 0.0;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.rel_tol = 1e-6;
    bad.max_intervals = 8;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    QuadratureSpec tight;
    tight.max_intervals = 16;
    tight.rel_tol = 1e-14;
    CHECK_THROWS_AS(
        integrate_adaptive([](double x) { return std::sin(1000.0 * x); }, 0.0, 50.0, tight),
        accuracy_error);
}

TEST_CASE("bessel_i0 matches the series oracle") {
    // frozen from a 50-term series evaluation
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(1.0) == Catch::Approx(1.2660658777520083356).epsilon(1e-14));
    CHECK(bessel_i0(10.0) == Catch::Approx(2815.7166284662544715).epsilon(1e-13));
    CHECK(bessel_i0(15.0) == Catch::Approx(339649.37329791387952).epsilon(1e-12));

    for (double x : {0.5, 2.0, 5.0, 9.5, 12.0, 14.9}) {
        CAPTURE(x);
        CHECK(bessel_i0(x) ==
              Catch::Approx(oracles::bessel_i0_series(x)).epsilon(1e-13));
    }
}

TEST_CASE("bessel_i0 branches agree through the crossover") {
    for (double x = 12.0; x <= 18.0; x += 0.25) {
        CAPTURE(x);
        CHECK(bessel_i0(x) ==
              Catch::Approx(oracles::bessel_i0_series(x, 80)).epsilon(1e-12));
        CHECK(bessel_i0_scaled(x) ==
              Catch::Approx(std::exp(-x) * oracles::bessel_i0_series(x, 80)).epsilon(1e-12));
    }
}

TEST_CASE("bessel_i0 domain and range errors") {
    CHECK_THROWS_AS(bessel_i0(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(bessel_i0(800.0), std::range_error);
    CHECK(bessel_i0_scaled(800.0) > 0.0); // scaled variant stays finite
}

TEST_CASE("marcum_q1 fixed points") {
    CHECK(marcum_q1(1.5, 0.0) == 1.0);
    CHECK(marcum_q1(0.0, 2.0) == Catch::Approx(std::exp(-2.0)).epsilon(1e-15));
    // frozen from the quadrature oracle at rel_tol 1e-10
    CHECK(marcum_q1(1.0, 2.0) == Catch::Approx(0.269012060035909997).epsilon(1e-10));
    CHECK(marcum_q1(1.0, 2.0) ==
          Catch::Approx(oracles::marcum_q1_quadrature(1.0, 2.0)).epsilon(1e-9));
}

TEST_CASE("marcum_q1 domain errors") {
    CHECK_THROWS_AS(marcum_q1(std::nan(""), 1.0), std::domain_error);
    CHECK_THROWS_AS(marcum_q1(1.0, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(marcum_q1(-0.5, 1.0), std::domain_error);
}

TEST_CASE("marcum_q1 stays in [0,1] and is monotone") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    for (int i = 0; i < 400; ++i) {
        const double a = u(gen);
        const double b = u(gen);
        const double q = marcum_q1(a, b);
        CAPTURE(a, b);
        REQUIRE(q >= 0.0);
        REQUIRE(q <= 1.0);
        CHECK(marcum_q1(a, b + 0.3) <= q + 1e-14);
        CHECK(marcum_q1(a + 0.3, b) >= q - 1e-14);
    }
}

TEST_CASE("marcum_q1 telescopes over partitions") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> ua(0.0, 6.0);
    std::uniform_real_distribution<double> ub(0.05, 0.4);
    for (int rep = 0; rep < 50; ++rep) {
        const double a = ua(gen);
        double b = 0.0;
        double sum = 0.0;
        double first = marcum_q1(a, 0.0);
        double prev = first;
        for (int k = 0; k < 40; ++k) {
            b += ub(gen);
            const double next = marcum_q1(a, b);
            sum += prev - next;
            prev = next;
        }
        CAPTURE(a, b);
        CHECK(std::abs(sum - (first - prev)) < 1e-12);
    }
}

TEST_CASE("marcum_q1 large-argument reflection stays sane") {
    // offset/sigma ratios from nearly stable terminals
    const double q = marcum_q1(33.0, 1.0);
    CHECK(q == Catch::Approx(1.0).margin(1e-12));
    CHECK(marcum_q1(33.0, 40.0) < 1e-8);
    CHECK(marcum_q1(33.0, 33.0) == Catch::Approx(0.5).margin(0.02));
}

TEST_CASE("regularized_lower_gamma fixed points") {
    CHECK(regularized_lower_gamma(3.0, 0.0) == 0.0);
    CHECK(regularized_lower_gamma(1.0, 1.0) ==
          Catch::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    // frozen from the quadrature oracle of t^2 e^-t / Gamma(3) over [0, 2.5]
    CHECK(regularized_lower_gamma(3.0, 2.5) ==
          Catch::Approx(0.456186884116670482).epsilon(1e-12));
    CHECK_THROWS_AS(regularized_lower_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_lower_gamma(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_lower_gamma(1.0, -1.0), std::domain_error);
}

TEST_CASE("regularized_lower_gamma is a CDF in x") {
    for (double m : {0.5, 1.0, 3.0, 10.0}) {
        double prev = 0.0;
        for (double x = 0.0; x <= 60.0; x += 0.5) {
            const double p = regularized_lower_gamma(m, x);
            CAPTURE(m, x);
            REQUIRE(p >= prev - 1e-15);
            REQUIRE(p <= 1.0);
            prev = p;
        }
        CHECK(regularized_lower_gamma(m, 800.0) == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("regularized_lower_gamma agrees with the density quadrature") {
    for (double m : {0.5, 1.0, 3.0, 10.0}) {
        for (double x : {0.05, 0.3, 0.8, 1.5, 3.0, 6.0}) {
            // unit-mean density of the fading power: CDF at x equals P(m, m x)
            CAPTURE(m, x);
            CHECK(regularized_lower_gamma(m, m * x) ==
                  Catch::Approx(oracles::gamma_cdf_quadrature(m, x)).epsilon(1e-8));
        }
    }
}

TEST_CASE("ln_gamma known values") {
    CHECK(std::abs(ln_gamma(1.0)) < 1e-14);
    CHECK(std::abs(ln_gamma(2.0)) < 1e-14);
    CHECK(ln_gamma(4.0) == Catch::Approx(std::log(6.0)).epsilon(1e-14));
    CHECK(ln_gamma(0.5) ==
          Catch::Approx(0.5 * std::log(3.14159265358979323846)).epsilon(1e-14));
    CHECK(ln_gamma(10.5) == Catch::Approx(std::lgamma(10.5)).epsilon(1e-13));
    CHECK(ln_gamma(0.25) == Catch::Approx(std::lgamma(0.25)).epsilon(1e-13));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-3.0), std::domain_error);
}
