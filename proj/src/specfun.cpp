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

#include "mmwlink/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mmwlink::specfun {

namespace {

constexpr double kI0Crossover = 15.0;
constexpr double kTwoPi = 6.283185307179586476925286766559;

// I0 power series, all terms positive so no cancellation at any x.
double i0_series(double x) {
    const double t = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= t / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum;
}

// Asymptotic tail sum P(1/x) with a_k = ((2k-1)!!)^2 / (8^k k!), truncated at
// the smallest term.
double i0_asymptotic_tail(double x) {
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 40; ++k) {
        const double num = 2.0 * k - 1.0;
        term *= num * num / (8.0 * k * x);
        if (term >= prev)
            break; // divergent tail reached
        sum += term;
        prev = term;
        if (term < sum * 1e-17)
            break;
    }
    return sum;
}

} // namespace

double bessel_i0(double x) {
    if (std::isnan(x))
        throw std::domain_error("bessel_i0: NaN argument");
    x = std::abs(x); // even function
    if (x < kI0Crossover)
        return i0_series(x);
    if (x > 712.0)
        throw std::range_error("bessel_i0: result overflows double; use bessel_i0_scaled");
    return std::exp(x) / std::sqrt(kTwoPi * x) * i0_asymptotic_tail(x);
}

double bessel_i0_scaled(double x) {
    if (std::isnan(x))
        throw std::domain_error("bessel_i0_scaled: NaN argument");
    x = std::abs(x);
    if (x < kI0Crossover)
        return std::exp(-x) * i0_series(x);
    return i0_asymptotic_tail(x) / std::sqrt(kTwoPi * x);
}

namespace {

// Poisson-mixture series: M(a,b) = sum_k pois(k; a^2/2) * P[Poisson(b^2/2) <= k].
// Valid while exp(-a^2/2) is representable.
double marcum_series(double a, double b) {
    const double alpha = 0.5 * a * a;
    const double beta = 0.5 * b * b;
    double p = std::exp(-alpha);  // Poisson pmf at k for mean alpha
    double q = std::exp(-beta);   // Poisson pmf at k for mean beta
    double tail = q;              // P[Poisson(beta) <= k]
    double cum = p;
    double sum = p * tail;
    for (int k = 1; k < 100000; ++k) {
        p *= alpha / k;
        q *= beta / k;
        tail += q;
        sum += p * tail;
        cum += p;
        // remaining mass is bounded by 1 - cum since tail <= 1
        if (1.0 - cum < 1e-15 && p < 1e-15)
            break;
    }
    return std::min(sum, 1.0);
}

} // namespace

double marcum_q1(double a, double b) {
    if (std::isnan(a) || std::isnan(b))
        throw std::domain_error("marcum_q1: NaN argument");
    if (a < 0.0 || b < 0.0)
        throw std::domain_error("marcum_q1: arguments must be non-negative");
    if (b == 0.0)
        return 1.0;
    if (a == 0.0)
        return std::exp(-0.5 * b * b);

    const double alpha = 0.5 * a * a;
    const double beta = 0.5 * b * b;
    if (alpha <= 500.0)
        return marcum_series(a, b);
    if (beta <= 500.0) {
        // Reflection: M(a,b) = 1 - M(b,a) + exp(-(a-b)^2/2) I0~(ab).
        const double cross = std::exp(-0.5 * (a - b) * (a - b)) * bessel_i0_scaled(a * b);
        double v = 1.0 - marcum_series(b, a) + cross;
        return std::min(std::max(v, 0.0), 1.0);
    }
    // Both arguments far outside the operating regime of the series; the
    // Rician mass is then effectively Gaussian around a.
    return 0.5 * std::erfc((b - a) / std::sqrt(2.0));
}

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

double ln_gamma_positive(double x) {
    // valid for x >= 0.5
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        acc += kLanczos[i] / (x - 1.0 + i);
    const double t = x + 6.5;
    return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

double ln_gamma(double m) {
    if (std::isnan(m) || m <= 0.0)
        throw std::domain_error("ln_gamma: argument must be positive");
    if (m >= 0.5)
        return ln_gamma_positive(m);
    // reflection for (0, 0.5)
    const double pi = 3.14159265358979323846264338327950288;
    return std::log(pi / std::sin(pi * m)) - ln_gamma_positive(1.0 - m);
}

namespace {

double lower_gamma_series(double m, double x) {
    double term = 1.0 / m;
    double sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (m + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16)
            break;
    }
    return sum * std::exp(-x + m * std::log(x) - ln_gamma(m));
}

double upper_gamma_cf(double m, double x) {
    // modified Lentz continued fraction for Q(m, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - m;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - m);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            break;
    }
    return h * std::exp(-x + m * std::log(x) - ln_gamma(m));
}

} // namespace

double regularized_lower_gamma(double m, double x) {
    if (std::isnan(m) || std::isnan(x))
        throw std::domain_error("regularized_lower_gamma: NaN argument");
    if (m <= 0.0)
        throw std::domain_error("regularized_lower_gamma: shape must be positive");
    if (x < 0.0)
        throw std::domain_error("regularized_lower_gamma: x must be non-negative");
    if (x == 0.0)
        return 0.0;
    if (x < m + 1.0)
        return std::min(lower_gamma_series(m, x), 1.0);
    return std::max(0.0, 1.0 - upper_gamma_cf(m, x));
}

} // namespace mmwlink::specfun
