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

#include "mmwlink/runconfig.hpp"

namespace mmwlink::cli {

// Each command writes its outputs under cfg.out_path and returns the process
// exit code: 0 success, 1 usage error, 2 domain error, 3 accuracy/validation
// failure, 4 I/O error. Outputs are byte-identical for identical
// (config, seed), independent of thread count.

/// Actual, approximate and sectorized gain cuts. Writes <out>.actual.csv,
/// <out>.approx.csv (theta_x_rad, theta_y_rad, gain_dbi) and <out>.sectors.csv
/// (sector_index, upper_angle_rad, gain_linear).
int cmd_pattern(const RunConfig &cfg);

/// Mixture PDF/CDF table over an SNR grid: <out>.csv (snr_db, pdf, cdf).
int cmd_distribution(const RunConfig &cfg);

/// Analytical outage sweep: <out>.csv (sweep_variable, value, outage_probability).
int cmd_outage(const RunConfig &cfg);

/// Monte Carlo vs analytical comparison: <out>.json report with the max
/// relative CDF gap over the checked probes, outage delta, and pass/fail.
/// Returns 3 when the configured tolerances are not met.
int cmd_validate(const RunConfig &cfg, unsigned threads = 1);

/// Exhaustive (N_t, N_r) sweep: <out>.csv evaluation grid (nt, nr, outage)
/// plus <out>.json summary.
int cmd_optimize(const RunConfig &cfg, unsigned threads = 1);

/// Full argv front end (config loading, flag overrides, dispatch).
int run_cli(int argc, char **argv);

} // namespace mmwlink::cli
