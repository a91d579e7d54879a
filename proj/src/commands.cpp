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

#include "mmwlink/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mmwlink/errors.hpp"
#include "mmwlink/optimize.hpp"
#include "mmwlink/version.hpp"

namespace mmwlink::cli {

namespace {

constexpr double kDegToRad = antenna::kPi / 180.0;

std::ofstream open_out(const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open output file: " + path);
    return out;
}

void write_metadata(std::ostream &out, const char *command, const RunConfig &cfg) {
    out << "# mmwlink " << kVersion << "\n";
    out << "# command: " << command << "\n";
    out << "# seed: " << cfg.seed << "\n";
    out << "# config_digest: " << cfg.digest_hex() << "\n";
    std::istringstream lines(cfg.canonical_text());
    std::string line;
    while (std::getline(lines, line))
        out << "# cfg " << line << "\n";
}

std::string out_base(const RunConfig &cfg, const char *fallback) {
    return cfg.out_path.empty() ? std::string(fallback) : cfg.out_path;
}

double gain_dbi(double linear) {
    return 10.0 * std::log10(std::max(linear, 1e-30));
}

nlohmann::json estimate_json(const montecarlo::OutageEstimate &est) {
    return {{"p_hat", est.p_hat},
            {"std_err", est.std_err},
            {"n", est.n},
            {"low_confidence", est.low_confidence}};
}

} // namespace

int cmd_pattern(const RunConfig &cfg) {
    const channel::LinkBudget link = cfg.to_link_budget();
    const antenna::ArrayConfig &arr = link.tx_array;
    arr.validate();
    if (!(cfg.theta_x_step_deg > 0.0) || cfg.theta_x_max_deg < cfg.theta_x_min_deg)
        throw std::invalid_argument("pattern: bad theta_x grid");

    const std::string base = out_base(cfg, "pattern");
    auto actual = open_out(base + ".actual.csv");
    auto approx = open_out(base + ".approx.csv");
    write_metadata(actual, "pattern", cfg);
    write_metadata(approx, "pattern", cfg);
    actual << "theta_x_rad,theta_y_rad,gain_dbi\n";
    approx << "theta_x_rad,theta_y_rad,gain_dbi\n";

    const int steps = static_cast<int>(
        std::floor((cfg.theta_x_max_deg - cfg.theta_x_min_deg) / cfg.theta_x_step_deg + 0.5));
    for (double cut_deg : cfg.cut_theta_y_deg) {
        const double ty = cut_deg * kDegToRad;
        for (int i = 0; i <= steps; ++i) {
            const double tx = (cfg.theta_x_min_deg + i * cfg.theta_x_step_deg) * kDegToRad;
            actual << format_double(tx) << ',' << format_double(ty) << ','
                   << format_double(gain_dbi(antenna::actual_gain(arr, tx, ty))) << '\n';
            approx << format_double(tx) << ',' << format_double(ty) << ','
                   << format_double(gain_dbi(antenna::approx_gain(arr, tx, ty))) << '\n';
        }
    }

    const antenna::SectorizedPattern pat = antenna::sectorize(
        arr, link.sectorization.d_param, link.sectorization.lobes,
        link.sectorization.sector0);
    auto sectors = open_out(base + ".sectors.csv");
    write_metadata(sectors, "pattern", cfg);
    sectors << "sector_index,upper_angle_rad,gain_linear\n";
    for (std::size_t i = 0; i < pat.levels.size(); ++i)
        sectors << i << ',' << format_double(pat.levels[i].upper_angle_rad) << ','
                << format_double(pat.levels[i].gain_linear) << '\n';
    return 0;
}

namespace {

std::pair<double, double> mixture_span_db(const channel::SnrMixtureModel &model) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto &c : model.components) {
        if (c.weight <= 0.0)
            continue;
        lo = std::min(lo, c.scale);
        hi = std::max(hi, c.scale);
    }
    return {10.0 * std::log10(lo) - 25.0, 10.0 * std::log10(hi) + 15.0};
}

} // namespace

int cmd_distribution(const RunConfig &cfg) {
    const channel::LinkBudget link = cfg.to_link_budget();
    const channel::SnrMixtureModel model = channel::build_mixture(link);

    double lo = cfg.snr_min_db;
    double hi = cfg.snr_max_db;
    if (std::isnan(lo) || std::isnan(hi)) {
        const auto span = mixture_span_db(model);
        if (std::isnan(lo))
            lo = span.first;
        if (std::isnan(hi))
            hi = span.second;
    }
    if (!(cfg.snr_step_db > 0.0) || hi < lo)
        throw std::invalid_argument("distribution: bad snr grid");

    auto out = open_out(out_base(cfg, "distribution") + ".csv");
    write_metadata(out, "distribution", cfg);
    out << "snr_db,pdf,cdf\n";
    const int steps = static_cast<int>(std::floor((hi - lo) / cfg.snr_step_db + 0.5));
    for (int i = 0; i <= steps; ++i) {
        const double db = lo + i * cfg.snr_step_db;
        const double snr = std::pow(10.0, 0.1 * db);
        out << format_double(db) << ',' << format_double(channel::mixture_pdf(model, snr))
            << ',' << format_double(channel::mixture_cdf(model, snr)) << '\n';
    }
    return 0;
}

int cmd_outage(const RunConfig &cfg) {
    const channel::LinkBudget base_link = cfg.to_link_budget();
    if (!(cfg.sweep_step > 0.0) || cfg.sweep_to < cfg.sweep_from)
        throw std::invalid_argument("outage: empty sweep range");
    const int steps =
        static_cast<int>(std::floor((cfg.sweep_to - cfg.sweep_from) / cfg.sweep_step + 0.5));

    auto apply = [&](double value) {
        channel::LinkBudget l = base_link;
        if (cfg.sweep == "tx_power_dbm") {
            l.tx_power_dbm = value;
        } else if (cfg.sweep == "distance_m") {
            l.distance_m = value;
        } else if (cfg.sweep == "n") {
            const int n = static_cast<int>(value);
            if (l.link_type != channel::LinkType::kA2G)
                l.rx_array.n = n;
            if (l.link_type != channel::LinkType::kG2A)
                l.tx_array.n = n;
        } else if (cfg.sweep == "sigma_deg") {
            if (l.link_type != channel::LinkType::kG2A)
                l.tx_orientation.sigma_rad = value * kDegToRad;
            if (l.link_type != channel::LinkType::kA2G)
                l.rx_orientation.sigma_rad = value * kDegToRad;
        } else {
            throw std::invalid_argument("outage: unknown sweep variable '" + cfg.sweep +
                                        "'");
        }
        return l;
    };

    auto out = open_out(out_base(cfg, "outage") + ".csv");
    write_metadata(out, "outage", cfg);
    out << "sweep_variable,value,outage_probability\n";
    for (int i = 0; i <= steps; ++i) {
        const double value = cfg.sweep_from + i * cfg.sweep_step;
        out << cfg.sweep << ',' << format_double(value) << ','
            << format_double(channel::outage_probability(apply(value))) << '\n';
    }
    return 0;
}

int cmd_validate(const RunConfig &cfg, unsigned threads) {
    const channel::LinkBudget link = cfg.to_link_budget();
    const montecarlo::SimulationSpec spec = cfg.to_simulation_spec();
    if (cfg.probe_points < 2)
        throw std::invalid_argument("validate: probe_points must be >= 2");
    if (spec.num_samples < 10000)
        throw std::domain_error("validate: reported estimates need >= 1e4 samples");

    if (cfg.sample_export_cap > 0) {
        // The leading samples of the full run: substreams are fixed per batch,
        // so a truncated run reproduces them exactly.
        montecarlo::SimulationSpec head = spec;
        head.num_samples = std::min(cfg.sample_export_cap, spec.num_samples);
        const auto samples = montecarlo::sample_link_snr(link, head, threads);
        auto dump = open_out(out_base(cfg, "validate") + ".samples.csv");
        write_metadata(dump, "validate", cfg);
        dump << "sample_index,snr_db\n";
        for (std::size_t i = 0; i < samples.size(); ++i)
            dump << i << ',' << format_double(10.0 * std::log10(samples[i])) << '\n';
    }

    const channel::SnrMixtureModel model = channel::build_mixture(link);
    const auto span = mixture_span_db(model);

    // Probe grid from the analytical support plus the outage threshold; kept
    // independent of the samples so reports are reproducible byte for byte.
    std::vector<double> probes;
    probes.reserve(cfg.probe_points + 1);
    for (int i = 0; i < cfg.probe_points; ++i) {
        const double db =
            span.first + (span.second - span.first) * i / (cfg.probe_points - 1.0);
        probes.push_back(std::pow(10.0, 0.1 * db));
    }
    probes.push_back(link.snr_threshold_linear());
    std::sort(probes.begin(), probes.end());

    const std::vector<std::uint64_t> counts =
        montecarlo::count_below(link, spec, probes, threads);
    const double n = static_cast<double>(spec.num_samples);

    double max_rel_err = 0.0;
    double max_rel_err_probe_db = 0.0;
    int checked = 0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const double emp = static_cast<double>(counts[i]) / n;
        if (emp < cfg.min_cdf)
            continue;
        const double ana = channel::mixture_cdf(model, probes[i]);
        const double rel = std::abs(ana - emp) / emp;
        ++checked;
        if (rel > max_rel_err) {
            max_rel_err = rel;
            max_rel_err_probe_db = 10.0 * std::log10(probes[i]);
        }
    }

    const double gamma_th = link.snr_threshold_linear();
    const std::size_t th_idx =
        std::lower_bound(probes.begin(), probes.end(), gamma_th) - probes.begin();
    montecarlo::OutageEstimate emp_outage;
    emp_outage.n = spec.num_samples;
    emp_outage.p_hat = static_cast<double>(counts[th_idx]) / n;
    emp_outage.std_err = std::sqrt(emp_outage.p_hat * (1.0 - emp_outage.p_hat) / n);
    emp_outage.low_confidence = static_cast<double>(counts[th_idx]) < 20.0;

    const double ana_outage = channel::mixture_cdf(model, gamma_th);
    const double outage_delta = std::abs(ana_outage - emp_outage.p_hat);
    const bool outage_ok =
        outage_delta <= std::max(cfg.outage_tolerance_se * emp_outage.std_err,
                                 cfg.cdf_tolerance * emp_outage.p_hat) ||
        (ana_outage < 1e-7 && emp_outage.p_hat < 1e-7);
    const bool cdf_ok = checked > 0 && max_rel_err <= cfg.cdf_tolerance;
    const bool pass = cdf_ok && outage_ok;

    nlohmann::json report{
        {"analytical_outage", ana_outage},
        {"cdf_max_rel_error", max_rel_err},
        {"cdf_max_rel_error_probe_db", max_rel_err_probe_db},
        {"cdf_probes_checked", checked},
        {"config_digest", cfg.digest_hex()},
        {"empirical_outage", estimate_json(emp_outage)},
        {"outage_delta", outage_delta},
        {"pass", pass},
        {"seed", spec.seed},
        {"tolerances",
         {{"cdf_rel", cfg.cdf_tolerance},
          {"min_cdf", cfg.min_cdf},
          {"outage_se", cfg.outage_tolerance_se}}},
        {"tool_version", kVersion},
    };
    auto out = open_out(out_base(cfg, "validate") + ".json");
    out << report.dump(2) << '\n';
    return pass ? 0 : 3;
}

int cmd_optimize(const RunConfig &cfg, unsigned threads) {
    const channel::LinkBudget link = cfg.to_link_budget();
    optimize::Method method;
    if (cfg.method == "analytical")
        method = optimize::Method::kAnalytical;
    else if (cfg.method == "monte_carlo")
        method = optimize::Method::kMonteCarlo;
    else
        throw std::invalid_argument("optimize: method must be 'analytical' or "
                                    "'monte_carlo'");
    const montecarlo::SimulationSpec spec = cfg.to_simulation_spec();
    const optimize::OptimizationResult result = optimize::optimize_array_sizes(
        link, cfg.n_max, method,
        method == optimize::Method::kMonteCarlo ? &spec : nullptr, threads);

    const std::string base = out_base(cfg, "optimize");
    auto grid = open_out(base + ".csv");
    write_metadata(grid, "optimize", cfg);
    grid << "nt,nr,outage\n";
    for (const auto &e : result.evaluations)
        grid << e.nt << ',' << e.nr << ',' << format_double(e.outage) << '\n';

    nlohmann::json summary{
        {"best_nt", result.best_nt},
        {"best_nr", result.best_nr},
        {"best_outage", result.best_outage},
        {"config_digest", cfg.digest_hex()},
        {"evaluations", result.evaluations.size()},
        {"method", cfg.method},
        {"n_max", cfg.n_max},
        {"seed", spec.seed},
        {"tool_version", kVersion},
    };
    auto out = open_out(base + ".json");
    out << summary.dump(2) << '\n';
    // wall time goes to stderr so reruns stay byte-identical
    std::fprintf(stderr, "mmwlink: optimize finished in %.3f s\n", result.elapsed_seconds);
    return 0;
}

} // namespace mmwlink::cli
