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

#include <functional>

#include "mmwlink/errors.hpp"

namespace mmwlink {

/// Accuracy budget for the adaptive integrators. abs_tol and rel_tol may not
/// both be zero; whichever is larger (after scaling by the current estimate)
/// wins.
struct QuadratureSpec {
    int max_intervals = 2048;
    double abs_tol = 0.0;
    double rel_tol = 1e-10;

    void validate() const;
};

/// Globally adaptive Gauss-Kronrod 15(7) integration of f over [a, b].
/// Throws accuracy_error if the interval budget is exhausted before the
/// error estimate meets the spec.
double integrate_adaptive(const std::function<double(double)> &f, double a, double b,
                          const QuadratureSpec &spec);

} // namespace mmwlink
