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

namespace mmwlink::specfun {

// All functions here are pure and safe to call concurrently.

/// Modified Bessel function of the first kind, order zero. Power series below
/// the crossover at x = 15, asymptotic expansion above. Throws std::range_error
/// once exp(x) is no longer representable, std::domain_error on NaN.
double bessel_i0(double x);

/// exp(-|x|) * I0(x). Never overflows; used by the Marcum reflection path.
double bessel_i0_scaled(double x);

/// First-order Marcum Q-function
///   M(a, b) = integral_b^inf x exp(-(x^2 + a^2)/2) I0(a x) dx,
/// computed by the canonical Poisson-mixture series with early termination.
/// Monotone non-increasing in b, non-decreasing in a, always in [0, 1].
double marcum_q1(double a, double b);

/// Regularized lower incomplete gamma P(m, x); the CDF of a Gamma(m, 1)
/// variable. Series branch for x < m + 1, continued fraction otherwise.
double regularized_lower_gamma(double m, double x);

/// log Gamma(m) for m > 0 (Lanczos approximation, g = 7).
double ln_gamma(double m);

} // namespace mmwlink::specfun
