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

#include "mmwlink/runconfig.hpp"

#include <charconv>
#include <string_view>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "mmwlink/errors.hpp"

namespace mmwlink::cli {

namespace {

constexpr double kDegToRad = antenna::kPi / 180.0;

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string &s) {
    const std::string t = trim(s);
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception &) {
        throw std::invalid_argument("config: not a number: '" + s + "'");
    }
    if (pos != t.size())
        throw std::invalid_argument("config: trailing characters in number: '" + s + "'");
    return v;
}

long long parse_int(const std::string &s) {
    const double v = parse_double(s);
    const long long i = static_cast<long long>(v);
    if (static_cast<double>(i) != v)
        throw std::invalid_argument("config: expected an integer: '" + s + "'");
    return i;
}

std::vector<double> parse_list(const std::string &s) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        if (!trim(item).empty())
            out.push_back(parse_double(item));
    }
    if (out.empty())
        throw std::invalid_argument("config: empty list: '" + s + "'");
    return out;
}

std::string format_list(const std::vector<double> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += format_double(v[i]);
    }
    return out;
}

struct Field {
    const char *section;
    const char *key;
    std::function<void(RunConfig &, const std::string &)> set;
    std::function<std::string(const RunConfig &)> get;
};

#define MMW_FIELD_D(sec, key, member)                                               \
    Field { sec, key, [](RunConfig &c, const std::string &v) { c.member = parse_double(v); }, \
            [](const RunConfig &c) { return format_double(c.member); } }
#define MMW_FIELD_I(sec, key, member)                                               \
    Field { sec, key, [](RunConfig &c, const std::string &v) { c.member = static_cast<int>(parse_int(v)); }, \
            [](const RunConfig &c) { return std::to_string(c.member); } }
#define MMW_FIELD_S(sec, key, member)                                               \
    Field { sec, key, [](RunConfig &c, const std::string &v) { c.member = trim(v); },       \
            [](const RunConfig &c) { return c.member; } }

const std::vector<Field> &field_table() {
    static const std::vector<Field> table = {
        MMW_FIELD_S("link", "type", link_type),
        MMW_FIELD_D("link", "distance_m", distance_m),
        MMW_FIELD_D("link", "tx_power_dbm", tx_power_dbm),
        MMW_FIELD_D("link", "noise_power_dbm", noise_power_dbm),
        MMW_FIELD_D("link", "nakagami_m", nakagami_m),
        MMW_FIELD_D("link", "snr_threshold_db", snr_threshold_db),
        MMW_FIELD_D("link", "capacity_bps_hz", capacity_bps_hz),
        MMW_FIELD_D("link", "building_height_m", building_height_m),
        MMW_FIELD_D("link", "carrier_ghz", carrier_ghz),

        MMW_FIELD_I("tx_array", "n", tx_array.n),
        MMW_FIELD_D("tx_array", "spacing_wavelengths", tx_array.spacing_wavelengths),
        MMW_FIELD_D("tx_array", "g_max_dbi", tx_array.g_max_dbi),
        MMW_FIELD_D("tx_array", "front_back_db", tx_array.front_back_db),
        MMW_FIELD_D("tx_array", "sidelobe_limit_db", tx_array.sidelobe_limit_db),
        MMW_FIELD_D("tx_array", "theta_3db_deg", tx_array.theta_3db_deg),
        MMW_FIELD_D("tx_array", "phi_3db_deg", tx_array.phi_3db_deg),
        MMW_FIELD_D("tx_array", "beta_x_rad", tx_array.beta_x_rad),
        MMW_FIELD_D("tx_array", "beta_y_rad", tx_array.beta_y_rad),

        MMW_FIELD_I("rx_array", "n", rx_array.n),
        MMW_FIELD_D("rx_array", "spacing_wavelengths", rx_array.spacing_wavelengths),
        MMW_FIELD_D("rx_array", "g_max_dbi", rx_array.g_max_dbi),
        MMW_FIELD_D("rx_array", "front_back_db", rx_array.front_back_db),
        MMW_FIELD_D("rx_array", "sidelobe_limit_db", rx_array.sidelobe_limit_db),
        MMW_FIELD_D("rx_array", "theta_3db_deg", rx_array.theta_3db_deg),
        MMW_FIELD_D("rx_array", "phi_3db_deg", rx_array.phi_3db_deg),
        MMW_FIELD_D("rx_array", "beta_x_rad", rx_array.beta_x_rad),
        MMW_FIELD_D("rx_array", "beta_y_rad", rx_array.beta_y_rad),

        MMW_FIELD_D("tx_orientation", "offset_x_deg", tx_orientation.offset_x_deg),
        MMW_FIELD_D("tx_orientation", "offset_y_deg", tx_orientation.offset_y_deg),
        MMW_FIELD_D("tx_orientation", "sigma_deg", tx_orientation.sigma_deg),
        MMW_FIELD_D("rx_orientation", "offset_x_deg", rx_orientation.offset_x_deg),
        MMW_FIELD_D("rx_orientation", "offset_y_deg", rx_orientation.offset_y_deg),
        MMW_FIELD_D("rx_orientation", "sigma_deg", rx_orientation.sigma_deg),

        MMW_FIELD_I("sectorization", "d_param", d_param),
        MMW_FIELD_I("sectorization", "lobes", lobes),
        MMW_FIELD_S("sectorization", "sector0", sector0),

        Field{"simulation", "samples",
              [](RunConfig &c, const std::string &v) {
                  c.samples = static_cast<std::uint64_t>(parse_int(v));
              },
              [](const RunConfig &c) { return std::to_string(c.samples); }},
        Field{"simulation", "seed",
              [](RunConfig &c, const std::string &v) {
                  c.seed = static_cast<std::uint64_t>(parse_int(v));
              },
              [](const RunConfig &c) { return std::to_string(c.seed); }},
        Field{"simulation", "batch_size",
              [](RunConfig &c, const std::string &v) {
                  c.batch_size = static_cast<std::uint32_t>(parse_int(v));
              },
              [](const RunConfig &c) { return std::to_string(c.batch_size); }},

        MMW_FIELD_D("pattern", "theta_x_min_deg", theta_x_min_deg),
        MMW_FIELD_D("pattern", "theta_x_max_deg", theta_x_max_deg),
        MMW_FIELD_D("pattern", "theta_x_step_deg", theta_x_step_deg),
        Field{"pattern", "cut_theta_y_deg",
              [](RunConfig &c, const std::string &v) { c.cut_theta_y_deg = parse_list(v); },
              [](const RunConfig &c) { return format_list(c.cut_theta_y_deg); }},

        MMW_FIELD_D("distribution", "snr_min_db", snr_min_db),
        MMW_FIELD_D("distribution", "snr_max_db", snr_max_db),
        MMW_FIELD_D("distribution", "snr_step_db", snr_step_db),

        MMW_FIELD_S("outage", "sweep", sweep),
        MMW_FIELD_D("outage", "from", sweep_from),
        MMW_FIELD_D("outage", "to", sweep_to),
        MMW_FIELD_D("outage", "step", sweep_step),

        MMW_FIELD_I("validate", "probe_points", probe_points),
        MMW_FIELD_D("validate", "min_cdf", min_cdf),
        MMW_FIELD_D("validate", "cdf_tolerance", cdf_tolerance),
        MMW_FIELD_D("validate", "outage_tolerance_se", outage_tolerance_se),
        Field{"validate", "sample_export_cap",
              [](RunConfig &c, const std::string &v) {
                  c.sample_export_cap = static_cast<std::uint64_t>(parse_int(v));
              },
              [](const RunConfig &c) { return std::to_string(c.sample_export_cap); }},

        MMW_FIELD_I("optimize", "n_max", n_max),
        MMW_FIELD_S("optimize", "method", method),

        MMW_FIELD_S("output", "path", out_path),
    };
    return table;
}

#undef MMW_FIELD_D
#undef MMW_FIELD_I
#undef MMW_FIELD_S

const Field *find_field(const std::string &section, const std::string &key) {
    for (const Field &f : field_table())
        if (section == f.section && key == f.key)
            return &f;
    return nullptr;
}

} // namespace

std::string format_double(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(const std::string &text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

RunConfig RunConfig::from_text(const std::string &text) {
    RunConfig cfg;
    bool saw_tx_orientation = false;
    bool saw_rx_orientation = false;

    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';')
            continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(line_no) +
                                            ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            bool known = false;
            for (const Field &f : field_table())
                known = known || section == f.section;
            if (!known)
                throw std::invalid_argument("config line " + std::to_string(line_no) +
                                            ": unknown section [" + section + "]");
            if (section == "tx_orientation")
                saw_tx_orientation = true;
            if (section == "rx_orientation")
                saw_rx_orientation = true;
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const Field *field = find_field(section, key);
        if (field == nullptr)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": unknown key '" + section + "." + key + "'");
        field->set(cfg, value);
    }

    // Ground terminals default to perfect stability unless configured.
    if (cfg.link_type == "g2a" && !saw_tx_orientation)
        cfg.tx_orientation = {0.0, 0.0, 0.0};
    if (cfg.link_type == "a2g" && !saw_rx_orientation)
        cfg.rx_orientation = {0.0, 0.0, 0.0};
    return cfg;
}

RunConfig RunConfig::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

std::string RunConfig::canonical_text() const {
    // The output location is not part of the run's identity: two runs writing
    // to different paths must produce identical bytes and digests.
    std::string out;
    std::string section;
    for (const Field &f : field_table()) {
        if (std::string_view(f.section) == "output")
            continue;
        if (section != f.section) {
            section = f.section;
            out += '[';
            out += section;
            out += "]\n";
        }
        out += f.key;
        out += " = ";
        out += f.get(*this);
        out += '\n';
    }
    return out;
}

std::string RunConfig::digest_hex() const {
    const std::uint64_t h = fnv1a64(canonical_text());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

channel::LinkBudget RunConfig::to_link_budget() const {
    channel::LinkBudget link;
    if (link_type == "a2a")
        link.link_type = channel::LinkType::kA2A;
    else if (link_type == "g2a")
        link.link_type = channel::LinkType::kG2A;
    else if (link_type == "a2g")
        link.link_type = channel::LinkType::kA2G;
    else
        throw std::invalid_argument("config: link.type must be a2a, g2a or a2g");

    link.distance_m = distance_m;
    link.tx_power_dbm = tx_power_dbm;
    link.noise_power_dbm = noise_power_dbm;
    link.nakagami_m = nakagami_m;
    link.building_height_m = building_height_m;
    link.snr_threshold_db = capacity_bps_hz > 0.0
                                ? 10.0 * std::log10(std::pow(2.0, capacity_bps_hz) - 1.0)
                                : snr_threshold_db;

    auto fill_array = [&](const ArraySection &a) {
        antenna::ArrayConfig c;
        c.n = a.n;
        c.carrier_hz = carrier_ghz * 1e9;
        c.element_spacing_wavelengths = a.spacing_wavelengths;
        c.beta_x = a.beta_x_rad;
        c.beta_y = a.beta_y_rad;
        c.g_max_dbi = a.g_max_dbi;
        c.front_back_db = a.front_back_db;
        c.sidelobe_limit_db = a.sidelobe_limit_db;
        c.theta_3db_deg = a.theta_3db_deg;
        c.phi_3db_deg = a.phi_3db_deg;
        return c;
    };
    link.tx_array = fill_array(tx_array);
    link.rx_array = fill_array(rx_array);

    auto fill_orientation = [&](const OrientationSection &o) {
        channel::OrientationStats s;
        s.offset_x_rad = o.offset_x_deg * kDegToRad;
        s.offset_y_rad = o.offset_y_deg * kDegToRad;
        s.sigma_rad = o.sigma_deg * kDegToRad;
        return s;
    };
    link.tx_orientation = fill_orientation(tx_orientation);
    link.rx_orientation = fill_orientation(rx_orientation);

    link.sectorization.d_param = d_param;
    link.sectorization.lobes = lobes;
    if (sector0 == "continuity")
        link.sectorization.sector0 = antenna::Sector0Rule::kContinuity;
    else if (sector0 == "paper")
        link.sectorization.sector0 = antenna::Sector0Rule::kPaper;
    else
        throw std::invalid_argument("config: sectorization.sector0 must be 'continuity' "
                                    "or 'paper'");
    return link;
}

montecarlo::SimulationSpec RunConfig::to_simulation_spec() const {
    montecarlo::SimulationSpec spec;
    spec.num_samples = samples;
    spec.seed = seed;
    spec.batch_size = batch_size;
    return spec;
}

} // namespace mmwlink::cli
