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

#include "mmwlink/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace mmwlink {

void QuadratureSpec::validate() const {
    if (max_intervals < 16)
        throw std::domain_error("QuadratureSpec: max_intervals must be >= 16");
    if (abs_tol < 0.0 || rel_tol < 0.0)
        throw std::domain_error("QuadratureSpec: tolerances must be non-negative");
    if (abs_tol == 0.0 && rel_tol == 0.0)
        throw std::domain_error("QuadratureSpec: abs_tol and rel_tol may not both be zero");
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double value;
    double error;
};

Segment evaluate(const std::function<double(double)> &f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double kron = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)
            gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    Segment s;
    s.a = a;
    s.b = b;
    s.value = kron * h;
    s.error = std::abs((kron - gauss) * h);
    return s;
}

} // namespace

double integrate_adaptive(const std::function<double(double)> &f, double a, double b,
                          const QuadratureSpec &spec) {
    spec.validate();
    if (a == b)
        return 0.0;

    auto worse = [](const Segment &l, const Segment &r) { return l.error < r.error; };
    std::priority_queue<Segment, std::vector<Segment>, decltype(worse)> queue(worse);
    queue.push(evaluate(f, a, b));
    double total = queue.top().value;
    double err = queue.top().error;
    int used = 1;

    while (true) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (err <= tol)
            return total;
        if (used >= spec.max_intervals)
            throw accuracy_error("integrate_adaptive: interval budget exhausted before "
                                 "reaching requested tolerance");
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = evaluate(f, worst.a, mid);
        Segment right = evaluate(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++used;
    }
}

} // namespace mmwlink
