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

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "mmwlink/commands.hpp"
#include "mmwlink/errors.hpp"
#include "mmwlink/version.hpp"

namespace mmwlink::cli {

int run_cli(int argc, char **argv) {
    CLI::App app{"mmwlink: link budget and channel statistics for UAV-mounted "
                 "mmWave square-array links"};
    app.set_version_flag("--version", std::string(kVersion));
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string sector0;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    int d_param = 0;
    int lobes = 0;
    unsigned threads = 1;

    app.add_option("--config", config_path, "configuration file (sectioned key = value)");
    app.add_option("--out", out_path, "output path base");
    auto *opt_seed = app.add_option("--seed", seed, "RNG seed");
    auto *opt_samples = app.add_option("--samples", samples, "Monte Carlo sample count");
    auto *opt_d = app.add_option("--d-param", d_param, "sectorization rings per lobe");
    auto *opt_lobes = app.add_option("--lobes", lobes)->check(CLI::Range(1, 2));
    auto *opt_s0 = app.add_option("--sector0", sector0, "innermost sector rule")
                       ->check(CLI::IsMember({"paper", "continuity"}));
    app.add_option("--threads", threads, "worker threads (execution detail only)");

    app.add_subcommand("pattern", "export actual/approximate/sectorized gain cuts");
    app.add_subcommand("distribution", "export the analytical SNR PDF/CDF");
    app.add_subcommand("outage", "sweep a parameter and export outage probabilities");
    app.add_subcommand("validate", "compare the analytical model against Monte Carlo");
    app.add_subcommand("optimize", "search array sizes minimizing outage");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunConfig cfg =
            config_path.empty() ? RunConfig{} : RunConfig::from_file(config_path);
        if (!out_path.empty())
            cfg.out_path = out_path;
        if (opt_seed->count())
            cfg.seed = seed;
        if (opt_samples->count())
            cfg.samples = samples;
        if (opt_d->count())
            cfg.d_param = d_param;
        if (opt_lobes->count())
            cfg.lobes = lobes;
        if (opt_s0->count())
            cfg.sector0 = sector0;

        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "pattern")
            return cmd_pattern(cfg);
        if (sub == "distribution")
            return cmd_distribution(cfg);
        if (sub == "outage")
            return cmd_outage(cfg);
        if (sub == "validate")
            return cmd_validate(cfg, threads);
        return cmd_optimize(cfg, threads);
    } catch (const io_error &e) {
        std::fprintf(stderr, "mmwlink: i/o error: %s\n", e.what());
        return 4;
    } catch (const accuracy_error &e) {
        std::fprintf(stderr, "mmwlink: accuracy error: %s\n", e.what());
        return 3;
    } catch (const std::domain_error &e) {
        std::fprintf(stderr, "mmwlink: domain error: %s\n", e.what());
        return 2;
    } catch (const std::range_error &e) {
        std::fprintf(stderr, "mmwlink: domain error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "mmwlink: usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "mmwlink: error: %s\n", e.what());
        return 1;
    }
}

} // namespace mmwlink::cli
