// SPDX-License-Identifier: Apache-2.0
//
// risaoi: RIS-assisted mmWave link optimization and AoI-aware scheduling
// Copyright (C) 2026 The risaoi authors
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

#include "risaoi/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace risaoi {

std::string to_string(Scheme s)
{
    switch (s) {
    case Scheme::proposed:
        return "proposed";
    case Scheme::random_ris:
        return "random_ris";
    case Scheme::random_bf:
        return "random_bf";
    case Scheme::round_robin:
        return "round_robin";
    }
    return "unknown";
}

Scheme parse_scheme(const std::string& name)
{
    for (Scheme s : kAllSchemes)
        if (to_string(s) == name)
            return s;
    throw ConfigError("unknown scheme '" + name + "'");
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    if (t == "inf" || t == "infinity")
        return std::numeric_limits<double>::infinity();
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || std::isnan(v))
        throw ConfigError("malformed number for '" + key + "': '" + text + "'");
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(key, item));
    if (out.empty())
        throw ConfigError("empty list for '" + key + "'");
    return out;
}

std::uint64_t parse_count(const std::string& key, const std::string& text)
{
    const double v = parse_double(key, text);
    if (v < 0.0 || v != std::floor(v) || v > 1e15)
        throw ConfigError("'" + key + "' must be a non-negative integer, got '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

Vec3 parse_point(const std::string& key, const std::string& text)
{
    const auto v = parse_list(key, text);
    if (v.size() != 3)
        throw ConfigError("'" + key + "' needs three comma-separated coordinates");
    return {v[0], v[1], v[2]};
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters()
{
    static const std::map<std::string, Setter> table = {
        {"n_tx", [](auto& c, auto& k, auto& v) { c.arrays.n_tx = parse_count(k, v); }},
        {"n_rx", [](auto& c, auto& k, auto& v) { c.arrays.n_rx = parse_count(k, v); }},
        {"ris_rows", [](auto& c, auto& k, auto& v) { c.arrays.ris_rows = parse_count(k, v); }},
        {"ris_cols", [](auto& c, auto& k, auto& v) { c.arrays.ris_cols = parse_count(k, v); }},
        {"ris_elements",
         [](auto& c, auto& k, auto& v) {
             const std::size_t m = parse_count(k, v);
             if (m < 1)
                 throw ConfigError("ris_elements must be >= 1");
             // Most square factorization m = rows * cols with rows <= cols.
             std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(m)));
             while (rows > 1 && m % rows != 0)
                 --rows;
             c.arrays.ris_rows = rows;
             c.arrays.ris_cols = m / rows;
         }},
        {"element_spacing_ratio",
         [](auto& c, auto& k, auto& v) { c.arrays.element_spacing_ratio = parse_double(k, v); }},
        {"bs_position", [](auto& c, auto& k, auto& v) { c.geometry.bs_position = parse_point(k, v); }},
        {"ris_position", [](auto& c, auto& k, auto& v) { c.geometry.ris_position = parse_point(k, v); }},
        {"ue_circle_center", [](auto& c, auto& k, auto& v) { c.geometry.ue_circle_center = parse_point(k, v); }},
        {"ue_circle_radius", [](auto& c, auto& k, auto& v) { c.geometry.ue_circle_radius = parse_double(k, v); }},
        {"bs_height", [](auto& c, auto& k, auto& v) { c.geometry.bs_position.z = parse_double(k, v); }},
        {"ris_height", [](auto& c, auto& k, auto& v) { c.geometry.ris_position.z = parse_double(k, v); }},
        {"ue_height", [](auto& c, auto& k, auto& v) { c.geometry.ue_circle_center.z = parse_double(k, v); }},
        {"tx_power_dbm", [](auto& c, auto& k, auto& v) { c.budget.tx_power = db_to_linear(parse_double(k, v)); }},
        {"noise_power_dbm",
         [](auto& c, auto& k, auto& v) { c.budget.noise_power = db_to_linear(parse_double(k, v)); }},
        {"snr_threshold_db",
         [](auto& c, auto& k, auto& v) { c.budget.snr_threshold = db_to_linear(parse_double(k, v)); }},
        {"pathloss_a", [](auto& c, auto& k, auto& v) { c.budget.pathloss_a = parse_double(k, v); }},
        {"pathloss_b", [](auto& c, auto& k, auto& v) { c.budget.pathloss_b = parse_double(k, v); }},
        {"shadow_sigma_db", [](auto& c, auto& k, auto& v) { c.budget.shadow_sigma = parse_double(k, v); }},
        {"rician_mu_db", [](auto& c, auto& k, auto& v) { c.budget.rician_mu = parse_double(k, v); }},
        {"carrier_frequency_ghz", [](auto& c, auto& k, auto& v) { c.carrier_frequency_ghz = parse_double(k, v); }},
        {"k_ues", [](auto& c, auto& k, auto& v) { c.k_ues = parse_count(k, v); }},
        {"t_slots", [](auto& c, auto& k, auto& v) { c.t_slots = parse_count(k, v); }},
        {"bits", [](auto& c, auto& k, auto& v) { c.bits = static_cast<int>(parse_count(k, v)); }},
        {"p_paths", [](auto& c, auto& k, auto& v) { c.p_paths = parse_count(k, v); }},
        {"l_paths", [](auto& c, auto& k, auto& v) { c.l_paths = parse_count(k, v); }},
        {"a_max",
         [](auto& c, auto& k, auto& v) {
             const auto list = parse_list(k, v);
             if (list.size() == 1) {
                 c.a_max = list.front();
                 c.a_max_per_ue.clear();
             } else {
                 c.a_max_per_ue = list;
             }
         }},
        {"high_requirement_count", [](auto& c, auto& k, auto& v) { c.high_requirement_count = parse_count(k, v); }},
        {"high_requirement_a_max",
         [](auto& c, auto& k, auto& v) { c.high_requirement_a_max = parse_double(k, v); }},
        {"delta", [](auto& c, auto& k, auto& v) { c.delta = parse_double(k, v); }},
        {"max_bcd_iterations",
         [](auto& c, auto& k, auto& v) { c.max_bcd_iterations = static_cast<int>(parse_count(k, v)); }},
        {"seed", [](auto& c, auto& k, auto& v) { c.seed = parse_count(k, v); }},
        {"realizations", [](auto& c, auto& k, auto& v) { c.realizations = parse_count(k, v); }},
        {"scheme", [](auto& c, auto&, auto& v) { c.scheme = parse_scheme(trim(v)); }},
        {"sweep_axis",
         [](auto& c, auto&, auto& v) {
             if (!c.sweep)
                 c.sweep.emplace();
             c.sweep->axis = trim(v);
         }},
        {"sweep_values",
         [](auto& c, auto& k, auto& v) {
             if (!c.sweep)
                 c.sweep.emplace();
             c.sweep->values = parse_list(k, v);
         }},
    };
    return table;
}

const std::vector<std::string> kSweepAxes = {"a_max", "high_requirement_count", "k_ues", "bits",
                                             "ris_elements", "n_tx", "t_slots"};

std::string format_axis_value(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

std::vector<double> ExperimentConfig::aoi_limits() const
{
    if (!a_max_per_ue.empty()) {
        if (a_max_per_ue.size() != k_ues)
            throw ConfigError("a_max lists " + std::to_string(a_max_per_ue.size()) + " limits for " +
                              std::to_string(k_ues) + " UEs");
        return a_max_per_ue;
    }
    std::vector<double> out(k_ues, a_max);
    for (std::size_t k = 0; k < std::min(high_requirement_count, k_ues); ++k)
        out[k] = high_requirement_a_max;
    return out;
}

void ExperimentConfig::validate() const
{
    arrays.validate();
    geometry.validate();
    budget.validate();
    if (k_ues < 1)
        throw ConfigError("k_ues must be >= 1");
    if (t_slots < 1)
        throw ConfigError("t_slots must be >= 1");
    if (bits < 1 || bits > 16)
        throw ConfigError("bits must be in [1, 16]");
    if (p_paths < 1 || l_paths < 1)
        throw ConfigError("p_paths and l_paths must be >= 1");
    if (!(delta > 0.0))
        throw ConfigError("delta must be positive");
    if (max_bcd_iterations < 1)
        throw ConfigError("max_bcd_iterations must be >= 1");
    if (realizations < 1)
        throw ConfigError("realizations must be >= 1");
    if (high_requirement_count > k_ues)
        throw ConfigError("high_requirement_count exceeds k_ues");
    for (double a : aoi_limits())
        if (!(a > 0.0))
            throw ConfigError("AoI limits must be positive");
    if (sweep) {
        if (!is_sweep_axis(sweep->axis))
            throw ConfigError("unknown sweep axis '" + sweep->axis + "'");
        if (sweep->values.empty())
            throw ConfigError("sweep_values is empty");
    }
}

void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value)
{
    const auto& table = setters();
    const auto it = table.find(trim(key));
    if (it == table.end())
        throw ConfigError("unknown config key '" + trim(key) + "'");
    it->second(cfg, it->first, value);
}

bool is_sweep_axis(const std::string& axis)
{
    return std::find(kSweepAxes.begin(), kSweepAxes.end(), axis) != kSweepAxes.end();
}

void apply_axis(ExperimentConfig& cfg, const std::string& axis, double value)
{
    if (!is_sweep_axis(axis))
        throw ConfigError("unknown sweep axis '" + axis + "'");
    set_config_value(cfg, axis, format_axis_value(value));
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base)
{
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        try {
            set_config_value(base, line.substr(0, eq), line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, std::move(base));
}

} // namespace risaoi
